#pragma once

#include <json.hpp>

#include "compatibility.hpp"
#include "isometry_action.hpp"
#include "joint_space.hpp"
#include "trig_engine.hpp"
#include "ttw_analysis.hpp"

namespace webclass {

using Json = nlohmann::json;

/** "b1,b2,b3,b4,b5,b6" with rational entries. */
KTParams parse_params_csv(const std::string& s);
std::vector<std::string> split_csv(const std::string& s);

Json to_json(const Rational& q);
/** {"value": ..., "exact": ...}; floats use %.17g. */
Json to_json(const Scalar& s);
Json to_json(const KTParams& b);
Json to_json(const WebType& w);
Json to_json(const SingularPoint& p);
Json to_json(const MovingFrame& f);
Json to_json(const JointVector& j);
Json to_json(const SwVerdict& v);
Json to_json(const TriangleReport& t);
Json to_json(const RecoveredAB& r);
Json to_json(const PotentialFamily& f);
Json to_json(const CaseOutcome& o);
Json to_json(const std::vector<Rational>& ks);
Json to_json(const KListComparison& c);
Json to_json(const ReducedMatch& m);
Json to_json(const NecessaryCondition& n);
Json to_json(const PolarReconciliation& r);
Json to_json(const GridAgreement& g);

/** Translational and fundamental invariants, moving frame and singular points. */
Json invariants_report(const KTParams& b);

}  // namespace webclass
