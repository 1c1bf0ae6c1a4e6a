#pragma once

#include <stdexcept>
#include <string>

namespace webclass {

enum class ErrorCode {
  Parse = 1,
  Precondition,
  UnknownVariable,
  DivisionByZero,
  NoFoci,
  FrameUndefined,
  FociUndefined,
  Unrepresentable,
  Incompatible,
  PoleEncounter,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace webclass
