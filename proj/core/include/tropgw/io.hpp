#pragma once

#include "tropgw/enumerate.hpp"
#include "tropgw/evalspace.hpp"
#include "tropgw/gw.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropgw {

using Json = nlohmann::ordered_json;

/// Everything one scenario file can hold. Rationals are written as "p/q"
/// strings, vectors as integer arrays.
struct Scenario {
    std::optional<PolyhedralComplex> complex;
    /// Set when the complex was given as a degeneration; kept for round trips.
    std::optional<NCDegenerationDescription> degeneration;
    std::size_t degeneration_chart_dim = 0;
    std::map<std::string, TropicalCurve> curves;
    std::map<std::string, std::vector<VertexInvariant>> invariants; ///< keyed by curve name
    std::map<std::string, std::map<std::string, Rational>> cut_points; ///< keyed by curve name
    std::optional<ConstraintSet> constraints;
    std::optional<std::string> reference_curve; ///< curve whose type enumeration reports
    Json requests = Json::object();
};

/// Throws Parse with line and column for malformed JSON, and with the
/// offending JSON path for schema errors. Module validation errors propagate.
Scenario parse_scenario(const std::string &text);
Scenario load_scenario(const std::filesystem::path &path);
Json to_json(const Scenario &s);

Json to_json(const Rational &q);
Json to_json(const RationalPoint &p);
Json to_json(const IntegralVector &v);
Json to_json(const IntegerMatrix &m);
Json to_json(const IntegralAffinePolytope &p);
Json to_json(const PolyhedralComplex &c);
Json to_json(const NCDegenerationDescription &d);
Json to_json(const Fan &f);
Json to_json(const StratumLocation &s);
Json to_json(const TropicalCurve &c);
Json to_json(const ValidationReport &r);
Json to_json(const CutCurveComponent &c);
Json to_json(const StarCurve &s);
Json to_json(const EvaluationComponent &c);
Json to_json(const GluingDiagram &d);
Json to_json(const GWClass &c);
Json to_json(const VertexInvariant &v);
Json to_json(const GluingResult &r);
Json to_json(const LedgerReport &r);
Json to_json(const ConstraintSet &c);
Json to_json(const RigidCurveRecord &r);
Json to_json(const EnumerationResult &r);

Rational rational_from_json(const Json &j);
RationalPoint point_from_json(const Json &j);
IntegralVector vector_from_json(const Json &j);
IntegralAffinePolytope polytope_from_json(const Json &j);
PolyhedralComplex complex_from_json(const Json &j);
NCDegenerationDescription degeneration_from_json(const Json &j);
TropicalCurve curve_from_json(const Json &j);
CutCurveComponent cut_component_from_json(const Json &j);
GWClass class_from_json(const Json &j);
VertexInvariant invariant_from_json(const Json &j);
ConstraintSet constraints_from_json(const Json &j);

} // namespace tropgw
