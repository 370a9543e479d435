#include "tropgw/io.hpp"

#include "tropgw/errors.hpp"

#include <fstream>
#include <sstream>

namespace tropgw {

namespace {

const Json &field(const Json &j, const char *key) {
    if (!j.is_object()) fail(ErrorCategory::Parse, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(ErrorCategory::Parse, std::string("missing field '") + key + "'");
    return *it;
}

const Json *optional_field(const Json &j, const char *key) {
    if (!j.is_object()) fail(ErrorCategory::Parse, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string string_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_string()) fail(ErrorCategory::Parse, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

long integer_value(const Json &v, const std::string &what) {
    if (!v.is_number_integer()) fail(ErrorCategory::Parse, what + " must be an integer");
    return v.get<long>();
}

const Json &array_value(const Json &v, const std::string &what) {
    if (!v.is_array()) fail(ErrorCategory::Parse, what + " must be an array");
    return v;
}

// Runs f, prefixing schema errors with a JSON path.
template <class F> auto within(const std::string &path, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        if (e.category() != ErrorCategory::Parse) throw;
        const std::string msg = e.what();
        if (msg.rfind("at /", 0) == 0) fail(ErrorCategory::Parse, "at " + path + msg.substr(3));
        fail(ErrorCategory::Parse, "at " + path + ": " + msg);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCategory::Parse, "at " + path + ": " + e.what());
    }
}

std::string line_column(const std::string &text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json string_array(const std::vector<std::string> &v) {
    Json a = Json::array();
    for (const auto &s : v) a.push_back(s);
    return a;
}

std::vector<std::string> strings_from_json(const Json &j, const std::string &what) {
    std::vector<std::string> out;
    for (const auto &s : array_value(j, what)) {
        if (!s.is_string()) fail(ErrorCategory::Parse, what + " must contain strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

Json to_json(const Integer &z) { return to_string(z); }

Json to_json(const EnergyExponent &q) {
    Json o = Json::object();
    for (const auto &[s, k] : q) o[s] = k.fits_slong_p() ? Json(k.get_si()) : Json(to_string(k));
    return o;
}

Json to_json(const ToricDatum &t) {
    Json rows = Json::object();
    for (const auto &[e, r] : t.weight_rows) rows[e] = to_json(r);
    return Json{{"rank", t.rank}, {"rows", rows}};
}

Json to_json(const QuotientResult &q) {
    return Json{{"direction", to_json(q.direction)}, {"projection", to_json(q.projection)}, {"section", to_json(q.section)}};
}

std::string side_name(CutSide s) {
    switch (s) {
    case CutSide::Tail: return "tail";
    case CutSide::Head: return "head";
    case CutSide::End: return "end";
    }
    return "?";
}

} // namespace

Json to_json(const Rational &q) { return to_string(q); }

Json to_json(const RationalPoint &p) {
    Json a = Json::array();
    for (const auto &x : p) a.push_back(to_string(x));
    return a;
}

Json to_json(const IntegralVector &v) {
    Json a = Json::array();
    for (const auto &x : v.entries()) a.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(to_string(x)));
    return a;
}

Json to_json(const IntegerMatrix &m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

Json to_json(const IntegralAffinePolytope &p) {
    Json cs = Json::array();
    for (const auto &c : p.constraints()) {
        Json o{{"linear", to_json(c.functional.linear)}, {"constant", to_json(c.functional.constant)}};
        if (c.strict) o["strict"] = true;
        cs.push_back(std::move(o));
    }
    return Json{{"ambient_dim", p.ambient_dim()}, {"constraints", cs}};
}

Json to_json(const PolyhedralComplex &c) {
    Json faces = Json::array();
    for (const auto &f : c.faces()) {
        Json o{{"id", f.id}, {"constraints", to_json(f.polytope)["constraints"]}};
        o["chart_real_dim"] = f.chart_real_dim;
        faces.push_back(std::move(o));
    }
    Json inc = Json::array();
    for (const auto &[a, b] : c.incidence()) inc.push_back(Json::array({a, b}));
    return Json{{"ambient_dim", c.ambient_dim()}, {"faces", faces}, {"incidence", inc}};
}

Json to_json(const NCDegenerationDescription &d) {
    Json inter = Json::array();
    for (const auto &s : d.intersections) inter.push_back(string_array(s));
    return Json{{"components", string_array(d.components)}, {"intersections", inter}};
}

Json to_json(const Fan &f) {
    Json cones = Json::array();
    for (const auto &c : f.cones()) cones.push_back(Json{{"face", c.face}, {"cone", to_json(c.cone)}});
    return Json{{"ambient_dim", f.ambient_dim()}, {"cones", cones}};
}

Json to_json(const StratumLocation &s) {
    return Json{{"face", s.face}, {"active", s.active}, {"dimension", s.dimension}};
}

Json to_json(const TropicalCurve &c) {
    Json vs = Json::array(), es = Json::array(), ends = Json::array();
    for (const auto &v : c.vertices())
        vs.push_back(Json{{"id", v.id}, {"position", to_json(v.position)}, {"genus", v.genus}});
    for (const auto &e : c.internal_edges())
        es.push_back(Json{{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"length", to_json(e.length)},
                          {"derivative", to_json(e.derivative)}});
    for (const auto &e : c.ends())
        ends.push_back(Json{{"id", e.id}, {"vertex", e.vertex}, {"derivative", to_json(e.derivative)}, {"label", e.label}});
    return Json{{"vertices", vs}, {"edges", es}, {"ends", ends}};
}

Json to_json(const ValidationReport &r) {
    Json issues = Json::array();
    for (const auto &i : r.issues)
        issues.push_back(Json{{"kind", std::string(issue_name(i.kind))}, {"subject", i.subject}, {"message", i.message}});
    return Json{{"valid", r.ok()}, {"issues", issues}};
}

Json to_json(const CutCurveComponent &c) {
    Json edges = Json::array();
    for (const auto &e : c.cut_edges) {
        Json o{{"id", e.id},        {"derivative", to_json(e.derivative)}, {"cut_length", to_json(e.cut_length)},
               {"source", e.source}, {"side", side_name(e.side)}};
        if (e.side == CutSide::End) o["label"] = e.label;
        o["evaluation"] = to_json(c.evaluation_point(e));
        edges.push_back(std::move(o));
    }
    return Json{{"vertex", Json{{"id", c.vertex.id}, {"position", to_json(c.vertex.position)}, {"genus", c.vertex.genus}}},
                {"cut_edges", edges}};
}

Json to_json(const StarCurve &s) {
    Json rays = Json::array();
    for (const auto &r : s.rays) rays.push_back(Json{{"id", r.id}, {"derivative", to_json(r.derivative)}, {"source", r.source}});
    return Json{{"vertex", s.vertex_id}, {"genus", s.genus}, {"fan", to_json(s.fan)}, {"rays", rays},
                {"curve", to_json(s.as_curve())}};
}

Json to_json(const EvaluationComponent &c) {
    Json o{{"id", c.id()},
           {"kind", c.kind == EvaluationComponent::Kind::Full ? "full" : "ray-quotient"},
           {"face", c.face},
           {"direction", to_json(c.direction)},
           {"polytope", to_json(c.polytope)},
           {"stabilizer", to_string(c.stabilizer)},
           {"real_dimension", c.real_dimension}};
    if (c.quotient) o["quotient"] = to_json(*c.quotient);
    return o;
}

Json to_json(const GluingDiagram &d) {
    Json diag = Json::array(), outs = Json::array();
    for (const auto &p : d.diagonal)
        diag.push_back(Json{{"edge", p.edge},
                            {"tail_cut", p.tail_cut},
                            {"head_cut", p.head_cut},
                            {"tail_side", to_json(p.tail_side)},
                            {"head_side", to_json(p.head_side)},
                            {"identification", to_json(p.identification)}});
    for (const auto &o : d.outputs)
        outs.push_back(Json{{"position", o.position}, {"end", o.end}, {"label", o.label}, {"component", to_json(o.component)}});
    return Json{{"diagonal", diag},
                {"outputs", outs},
                {"forgotten", string_array(d.forgotten)},
                {"diagonal_real_dimension", d.diagonal_real_dimension},
                {"forgotten_real_dimension", d.forgotten_real_dimension}};
}

Json to_json(const GWClass &c) {
    Json o{{"coefficient", to_json(c.coefficient)}, {"q", to_json(c.q_exponent)}, {"hbar", c.hbar_exponent},
           {"degree", c.degree}};
    if (c.toric) o["toric"] = to_json(*c.toric);
    if (!c.fiber_generators.empty())
        o["fiber_generators"] = string_array({c.fiber_generators.begin(), c.fiber_generators.end()});
    return o;
}

Json to_json(const VertexInvariant &v) {
    Json o{{"vertex", v.vertex}, {"euler_check", v.euler_check}};
    o["class"] = to_json(v.cls);
    return o;
}

Json to_json(const GluingResult &r) {
    return Json{{"k_gamma", to_json(r.k_gamma)},
                {"aut_order", to_json(r.aut_order)},
                {"lattice_factor", to_json(r.lattice_factor)},
                {"degree_sum", r.degree_sum},
                {"forgotten_dimension", r.forgotten_dimension},
                {"class", to_json(r.cls)}};
}

Json to_json(const LedgerReport &r) {
    Json vs = Json::array(), es = Json::array();
    for (const auto &v : r.vertices) {
        Json o{{"vertex", v.vertex}, {"genus", v.genus}, {"valence", v.valence}, {"expected", v.expected}};
        if (v.hbar) o["hbar"] = *v.hbar;
        vs.push_back(std::move(o));
    }
    for (const auto &e : r.edges) es.push_back(Json{{"edge", e.edge}, {"separating", e.separating}, {"loop", e.loop}});
    return Json{{"vertices", vs},
                {"edges", es},
                {"total", r.total},
                {"expected", r.expected},
                {"genus_reduction", r.genus_reduction},
                {"splitting", r.splitting}};
}

Json to_json(const ConstraintSet &c) {
    Json pts = Json::array();
    for (const auto &p : c.points) {
        Json o{{"face", p.face}, {"position", to_json(p.position)}, {"offset", to_json(p.offset)}};
        if (!p.label.empty()) o["label"] = p.label;
        pts.push_back(std::move(o));
    }
    Json dist = Json::object();
    for (const auto &[f, n] : c.end_distribution) dist[f] = n;
    Json fan = Json::array();
    for (const auto &r : c.end_fan) fan.push_back(to_json(r));
    return Json{{"degree_bound", c.degree_bound}, {"scale", to_json(c.scale)}, {"end_fan", fan},
                {"end_distribution", dist}, {"points", pts}};
}

Json to_json(const RigidCurveRecord &r) {
    Json o{{"type", r.encoding},     {"multiplicity", to_json(r.multiplicity)}, {"rigid", r.rigid},
           {"max_entry", to_json(r.max_entry)}, {"curve", to_json(r.curve)}};
    if (r.coarse) o["coarse"] = to_json(*r.coarse);
    o["coarse_in_complex"] = r.coarse_in_complex;
    o["matches_reference"] = r.matches_reference;
    return o;
}

Json to_json(const EnumerationResult &r) {
    Json recs = Json::array();
    for (const auto &x : r.records) recs.push_back(to_json(x));
    return Json{{"class_degree", r.class_degree},
                {"pieces", r.pieces},
                {"total_multiplicity", to_json(r.total_multiplicity)},
                {"reference_multiplicity", to_json(r.reference_multiplicity)},
                {"warnings", string_array(r.warnings)},
                {"records", recs}};
}

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(ErrorCategory::Parse, "expected a rational as \"p/q\" or an integer");
}

RationalPoint point_from_json(const Json &j) {
    RationalPoint p;
    for (const auto &x : array_value(j, "point")) p.push_back(rational_from_json(x));
    return p;
}

IntegralVector vector_from_json(const Json &j) {
    std::vector<Integer> v;
    for (const auto &x : array_value(j, "integer vector")) {
        if (x.is_number_integer()) v.emplace_back(x.get<long>());
        else if (x.is_string()) v.push_back(parse_integer(x.get<std::string>()));
        else fail(ErrorCategory::Parse, "integer vector entries must be integers");
    }
    return IntegralVector(std::move(v));
}

namespace {

std::vector<Constraint> constraints_from_json(const Json &j, std::size_t dim) {
    std::vector<Constraint> cs;
    std::size_t i = 0;
    for (const auto &c : array_value(j, "constraints")) {
        cs.push_back(within("/constraints/" + std::to_string(i++), [&] {
            IntegralVector lin = vector_from_json(field(c, "linear"));
            if (lin.dim() != dim)
                fail(ErrorCategory::Parse, "linear part has " + std::to_string(lin.dim()) + " entries, expected " +
                                               std::to_string(dim));
            Rational k = 0;
            if (auto *p = optional_field(c, "constant")) k = rational_from_json(*p);
            bool strict = false;
            if (auto *p = optional_field(c, "strict")) strict = p->get<bool>();
            return Constraint{{std::move(lin), k}, strict};
        }));
    }
    return cs;
}

std::size_t size_field(const Json &j, const char *key) {
    const long v = integer_value(field(j, key), std::string("field '") + key + "'");
    if (v < 0) fail(ErrorCategory::Parse, std::string("field '") + key + "' must be nonnegative");
    return static_cast<std::size_t>(v);
}

CutSide side_from_name(const std::string &s) {
    if (s == "tail") return CutSide::Tail;
    if (s == "head") return CutSide::Head;
    if (s == "end") return CutSide::End;
    fail(ErrorCategory::Parse, "unknown cut side '" + s + "'");
}

} // namespace

IntegralAffinePolytope polytope_from_json(const Json &j) {
    const std::size_t dim = size_field(j, "ambient_dim");
    return IntegralAffinePolytope(dim, constraints_from_json(field(j, "constraints"), dim));
}

PolyhedralComplex complex_from_json(const Json &j) {
    const std::size_t dim = size_field(j, "ambient_dim");
    std::vector<Face> faces;
    std::size_t i = 0;
    for (const auto &f : array_value(field(j, "faces"), "faces")) {
        faces.push_back(within("/faces/" + std::to_string(i++), [&] {
            std::size_t chart = 0;
            if (optional_field(f, "chart_real_dim")) chart = size_field(f, "chart_real_dim");
            return Face{string_field(f, "id"), IntegralAffinePolytope(dim, constraints_from_json(field(f, "constraints"), dim)),
                        chart};
        }));
    }
    std::vector<std::pair<FaceId, FaceId>> inc;
    if (auto *p = optional_field(j, "incidence"))
        for (const auto &pair : array_value(*p, "incidence")) {
            auto names = strings_from_json(pair, "incidence pair");
            if (names.size() != 2) fail(ErrorCategory::Parse, "incidence pairs have two entries");
            inc.emplace_back(names[0], names[1]);
        }
    return PolyhedralComplex(dim, std::move(faces), std::move(inc));
}

NCDegenerationDescription degeneration_from_json(const Json &j) {
    NCDegenerationDescription d;
    d.components = strings_from_json(field(j, "components"), "components");
    if (auto *p = optional_field(j, "intersections"))
        for (const auto &s : array_value(*p, "intersections")) d.intersections.push_back(strings_from_json(s, "intersection"));
    return d;
}

TropicalCurve curve_from_json(const Json &j) {
    std::vector<CurveVertex> vs;
    std::vector<InternalEdge> es;
    std::vector<CurveEnd> ends;
    std::size_t i = 0;
    for (const auto &v : array_value(field(j, "vertices"), "vertices"))
        vs.push_back(within("/vertices/" + std::to_string(i++), [&] {
            long g = 0;
            if (auto *p = optional_field(v, "genus")) g = integer_value(*p, "genus");
            if (g < 0) fail(ErrorCategory::Parse, "genus must be nonnegative");
            return CurveVertex{string_field(v, "id"), point_from_json(field(v, "position")), static_cast<unsigned>(g)};
        }));
    i = 0;
    if (auto *p = optional_field(j, "edges"))
        for (const auto &e : array_value(*p, "edges"))
            es.push_back(within("/edges/" + std::to_string(i++), [&] {
                return InternalEdge{string_field(e, "id"), string_field(e, "tail"), string_field(e, "head"),
                                    rational_from_json(field(e, "length")), vector_from_json(field(e, "derivative"))};
            }));
    i = 0;
    if (auto *p = optional_field(j, "ends"))
        for (const auto &e : array_value(*p, "ends"))
            ends.push_back(within("/ends/" + std::to_string(i++), [&] {
                const std::string id = string_field(e, "id");
                return CurveEnd{id, string_field(e, "vertex"), vector_from_json(field(e, "derivative")),
                                optional_field(e, "label") ? string_field(e, "label") : id};
            }));
    return TropicalCurve(std::move(vs), std::move(es), std::move(ends));
}

CutCurveComponent cut_component_from_json(const Json &j) {
    const Json &v = field(j, "vertex");
    CutCurveComponent c{CurveVertex{string_field(v, "id"), point_from_json(field(v, "position")),
                                    static_cast<unsigned>(integer_value(field(v, "genus"), "genus"))},
                        {}};
    for (const auto &e : array_value(field(j, "cut_edges"), "cut_edges")) {
        const CutSide side = side_from_name(string_field(e, "side"));
        c.cut_edges.push_back(CutEdge{string_field(e, "id"), vector_from_json(field(e, "derivative")),
                                      rational_from_json(field(e, "cut_length")), string_field(e, "source"), side,
                                      side == CutSide::End ? string_field(e, "label") : ""});
    }
    return c;
}

GWClass class_from_json(const Json &j) {
    GWClass c;
    if (auto *p = optional_field(j, "coefficient")) c.coefficient = rational_from_json(*p);
    if (auto *p = optional_field(j, "q")) {
        if (!p->is_object()) fail(ErrorCategory::Parse, "q must map energy symbols to integers");
        for (const auto &[sym, k] : p->items())
            c.q_exponent[sym] = k.is_string() ? parse_integer(k.get<std::string>()) : Integer(integer_value(k, "q exponent"));
    }
    c.hbar_exponent = integer_value(field(j, "hbar"), "hbar");
    c.degree = optional_field(j, "degree") ? integer_value(field(j, "degree"), "degree") : 0;
    if (auto *p = optional_field(j, "toric")) {
        ToricDatum t;
        t.rank = size_field(*p, "rank");
        const Json &rows = field(*p, "rows");
        if (!rows.is_object()) fail(ErrorCategory::Parse, "toric rows must map edge ids to covectors");
        for (const auto &[edge, row] : rows.items()) t.weight_rows.emplace(edge, vector_from_json(row));
        c.toric = std::move(t);
    }
    if (auto *p = optional_field(j, "fiber_generators"))
        for (auto &s : strings_from_json(*p, "fiber_generators")) c.fiber_generators.insert(std::move(s));
    check_class(c);
    return c;
}

VertexInvariant invariant_from_json(const Json &j) {
    VertexInvariant v{string_field(j, "vertex"), class_from_json(field(j, "class")), 0};
    v.euler_check = optional_field(j, "euler_check") ? integer_value(field(j, "euler_check"), "euler_check") : v.cls.hbar_exponent;
    return v;
}

ConstraintSet constraints_from_json(const Json &j) {
    ConstraintSet c;
    c.degree_bound = integer_value(field(j, "degree_bound"), "degree_bound");
    if (auto *p = optional_field(j, "scale")) {
        const Rational s = rational_from_json(*p);
        if (s.get_den() != 1) fail(ErrorCategory::Parse, "scale must be an integer");
        c.scale = s.get_num();
    }
    if (auto *p = optional_field(j, "end_fan"))
        for (const auto &r : array_value(*p, "end_fan")) c.end_fan.push_back(vector_from_json(r));
    if (auto *p = optional_field(j, "end_distribution")) {
        if (!p->is_object()) fail(ErrorCategory::Parse, "end_distribution must map face ids to counts");
        for (const auto &[face, n] : p->items()) {
            const long k = integer_value(n, "end count");
            if (k < 0) fail(ErrorCategory::Parse, "end counts must be nonnegative");
            c.end_distribution[face] = static_cast<std::size_t>(k);
        }
    }
    std::size_t i = 0;
    for (const auto &p : array_value(field(j, "points"), "points"))
        c.points.push_back(within("/points/" + std::to_string(i++), [&] {
            ConstraintPoint pt{string_field(p, "face"), point_from_json(field(p, "position")), {}, ""};
            pt.offset = optional_field(p, "offset") ? point_from_json(field(p, "offset"))
                                                    : RationalPoint(pt.position.size(), Rational(0));
            if (optional_field(p, "label")) pt.label = string_field(p, "label");
            return pt;
        }));
    return c;
}

Scenario parse_scenario(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        fail(ErrorCategory::Parse, "malformed scenario at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                                       e.what());
    }
    if (!j.is_object()) fail(ErrorCategory::Parse, "a scenario must be a JSON object");
    Scenario s;
    if (auto *c = optional_field(j, "complex")) {
        within("/complex", [&] {
            if (auto *d = optional_field(*c, "degeneration")) {
                s.degeneration = degeneration_from_json(*d);
                s.degeneration_chart_dim = optional_field(*c, "chart_real_dim") ? size_field(*c, "chart_real_dim") : 0;
                s.complex = dual_complex(*s.degeneration, s.degeneration_chart_dim);
            } else {
                s.complex = complex_from_json(*c);
            }
        });
    }
    if (auto *cs = optional_field(j, "curves")) {
        if (!cs->is_object()) fail(ErrorCategory::Parse, "at /curves: expected an object of named curves");
        for (const auto &[name, c] : cs->items())
            s.curves.emplace(name, within("/curves/" + name, [&] { return curve_from_json(c); }));
    }
    if (auto *is = optional_field(j, "invariants")) {
        if (!is->is_object()) fail(ErrorCategory::Parse, "at /invariants: expected an object keyed by curve name");
        for (const auto &[name, list] : is->items()) {
            if (!s.curves.contains(name)) fail(ErrorCategory::Validation, "invariants given for unknown curve '" + name + "'");
            std::size_t i = 0;
            for (const auto &v : array_value(list, "invariants"))
                s.invariants[name].push_back(
                    within("/invariants/" + name + "/" + std::to_string(i++), [&] { return invariant_from_json(v); }));
            for (const auto &v : s.invariants[name]) s.curves.at(name).vertex_index(v.vertex);
        }
    }
    if (auto *cp = optional_field(j, "cut_points")) {
        for (const auto &[name, m] : cp->items()) {
            if (!s.curves.contains(name)) fail(ErrorCategory::Validation, "cut points given for unknown curve '" + name + "'");
            within("/cut_points/" + name, [&] {
                if (!m.is_object()) fail(ErrorCategory::Parse, "expected an object mapping edge ids to parameters");
                for (const auto &[edge, t] : m.items()) s.cut_points[name][edge] = rational_from_json(t);
            });
        }
    }
    if (auto *c = optional_field(j, "constraints")) {
        s.constraints = within("/constraints", [&] { return constraints_from_json(*c); });
        if (auto *r = optional_field(*c, "reference_curve")) {
            s.reference_curve = r->get<std::string>();
            if (!s.curves.contains(*s.reference_curve))
                fail(ErrorCategory::Validation, "reference curve '" + *s.reference_curve + "' is not defined");
        }
        if (s.complex) check_constraints(*s.complex, *s.constraints);
    }
    if (auto *r = optional_field(j, "requests")) s.requests = *r;
    return s;
}

Scenario load_scenario(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCategory::Usage, "cannot read scenario file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

Json to_json(const Scenario &s) {
    Json j = Json::object();
    if (s.degeneration) {
        Json c{{"degeneration", to_json(*s.degeneration)}};
        c["chart_real_dim"] = s.degeneration_chart_dim;
        j["complex"] = c;
    } else if (s.complex) {
        j["complex"] = to_json(*s.complex);
    }
    if (!s.curves.empty()) {
        Json cs = Json::object();
        for (const auto &[name, c] : s.curves) cs[name] = to_json(c);
        j["curves"] = cs;
    }
    if (!s.invariants.empty()) {
        Json is = Json::object();
        for (const auto &[name, list] : s.invariants) {
            Json a = Json::array();
            for (const auto &v : list) a.push_back(to_json(v));
            is[name] = a;
        }
        j["invariants"] = is;
    }
    if (!s.cut_points.empty()) {
        Json cp = Json::object();
        for (const auto &[name, m] : s.cut_points) {
            Json o = Json::object();
            for (const auto &[e, t] : m) o[e] = to_json(t);
            cp[name] = o;
        }
        j["cut_points"] = cp;
    }
    if (s.constraints) {
        Json c = to_json(*s.constraints);
        if (s.reference_curve) c["reference_curve"] = *s.reference_curve;
        j["constraints"] = c;
    }
    if (!s.requests.empty()) j["requests"] = s.requests;
    return j;
}

} // namespace tropgw
