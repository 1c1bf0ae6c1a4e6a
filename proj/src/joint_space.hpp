#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isometry_action.hpp"

namespace webclass {

struct KTPair {
  KTParams first;   // alpha: polar-type candidate
  KTParams second;  // beta: elliptic-hyperbolic candidate
};

struct JointVector {
  Rational d1, d2, d3, d4, d5, d6;
  bool has_foci = false;  // d7..d9 are set only when both sixth parameters are nonzero
  Scalar d7, d8, d9;
  bool exact() const { return !has_foci || (d7.exact && d8.exact && d9.exact); }
};

/** Foci S1, S2 of the second tensor and S3, S4 of the first, after labelling. */
struct FociQuad {
  SingularPoint s1, s2, s3, s4;
};

/**
 * The labelling of each tensor's foci is chosen to minimize (d8, d7, d9)
 * lexicographically, so the result does not depend on the frame.
 */
FociQuad labelled_foci(const KTPair& p);

/** Throws FociUndefined when a sixth parameter vanishes and with_foci is set. */
JointVector joint_invariants(const KTPair& p, bool with_foci = true);

struct SwVerdict {
  bool holds = false;
  std::vector<std::string> violated;  // e.g. "d1 = 0", "d7 != d8"
};

SwVerdict sw_characterize(const KTPair& p);

struct SwOrientedVerdict {
  SwVerdict verdict;
  std::string orientation;  // "as-given", "swapped" or "none"
};
/** Tries (first, second) and then (second, first). */
SwOrientedVerdict sw_characterize_any(const KTPair& p);

struct TriangleReport {
  Scalar d7, d8;
  Scalar area;
  int case_id = 0;
};

TriangleReport weakened_case(const KTPair& p);

struct RecoveredAB {
  Scalar a, b;
};
/** Center (a, |b|) of the polar tensor from the joint invariants of (Polar(a,b), EH). */
RecoveredAB recover_ab(const JointVector& j);
/** The closed forms as printed next to the case list; kept for comparison only. */
RecoveredAB recover_ab_printed(const JointVector& j);

}  // namespace webclass
