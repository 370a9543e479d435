#include "tropgw_cli/cli.hpp"

#include "tropgw/io.hpp"
#include "tropgw/isomorphism.hpp"
#include "tropgw_cli/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tropgw::cli {

int exit_code(ErrorCategory category) noexcept { return 10 + static_cast<int>(category); }

namespace {

struct Options {
    std::string scenario;
    std::string curve;
    std::string emit_diagram;
    std::string balancing = "interior-only";
    std::string format = "text";
    std::string vertex;
    std::string point;
    std::size_t budget = EnumerationOptions{}.budget;
    long descendant_shift = -1;
};

const TropicalCurve &pick_curve(const Scenario &s, const Options &o, std::string &name) {
    name = o.curve;
    if (name.empty()) {
        if (s.requests.is_object())
            for (const auto &[key, req] : s.requests.items())
                if (req.is_object() && req.contains("curve") && req["curve"].is_string()) {
                    name = req["curve"].get<std::string>();
                    break;
                }
    }
    if (name.empty()) {
        if (s.curves.size() != 1) fail(ErrorCategory::Usage, "the scenario has several curves; choose one with --curve");
        name = s.curves.begin()->first;
    }
    auto it = s.curves.find(name);
    if (it == s.curves.end()) fail(ErrorCategory::Usage, "no curve named '" + name + "' in the scenario");
    return it->second;
}

const PolyhedralComplex &need_complex(const Scenario &s) {
    if (!s.complex) fail(ErrorCategory::Usage, "the scenario has no complex");
    return *s.complex;
}

BalancingMode balancing_mode(const std::string &m) {
    if (m == "on") return BalancingMode::On;
    if (m == "off") return BalancingMode::Off;
    return BalancingMode::InteriorOnly;
}

RationalPoint parse_point(const std::string &text) {
    RationalPoint p;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) p.push_back(parse_rational(part));
    if (p.empty()) fail(ErrorCategory::Usage, "--point needs comma-separated coordinates");
    return p;
}

std::map<std::string, Rational> cut_points_for(const Scenario &s, const std::string &name, const TropicalCurve &c) {
    auto it = s.cut_points.find(name);
    return it == s.cut_points.end() ? midpoint_cut_points(c) : it->second;
}

std::string class_text(const GWClass &c) {
    if (c.is_zero()) return "0";
    std::string out = to_string(c.coefficient) + " hbar^" + std::to_string(c.hbar_exponent);
    const std::string q = to_string(c.q_exponent);
    if (q != "0") out += " q^(" + q + ")";
    return out + ", degree " + std::to_string(c.degree);
}

std::string component_text(const EvaluationComponent &c) {
    std::ostringstream s;
    s << (c.kind == EvaluationComponent::Kind::Full ? "full" : "ray-quotient") << " over " << c.face
      << " direction " << c.direction.to_string() << " rank " << c.rank() << " real dimension " << c.real_dimension
      << " stabilizer " << to_string(c.stabilizer) << " polytope " << describe(c.polytope);
    return s.str();
}

void emit(std::ostream &out, const Options &o, const Json &j, const std::string &text) {
    if (o.format == "json") out << j.dump(2) << "\n";
    else out << text;
}

int cmd_validate(const Scenario &s, const Options &o, std::ostream &out) {
    const auto &cx = need_complex(s);
    std::vector<std::string> names;
    if (!o.curve.empty()) names.push_back(o.curve);
    else
        for (const auto &[n, c] : s.curves) names.push_back(n);
    Json j{{"complex", {{"faces", cx.faces().size()}, {"valid", true}}}};
    Json curves = Json::object();
    std::ostringstream t;
    t << "complex: " << cx.faces().size() << " faces in R^" << cx.ambient_dim() << ", valid\n";
    bool ok = true;
    for (const auto &n : names) {
        auto it = s.curves.find(n);
        if (it == s.curves.end()) fail(ErrorCategory::Usage, "no curve named '" + n + "' in the scenario");
        const auto report = validate(it->second, cx, balancing_mode(o.balancing));
        curves[n] = to_json(report);
        t << "curve " << n << ": " << (report.ok() ? "valid" : "invalid") << "\n";
        for (const auto &i : report.issues) t << "  " << issue_name(i.kind) << " at " << i.subject << ": " << i.message << "\n";
        ok = ok && report.ok();
    }
    j["curves"] = curves;
    emit(out, o, j, t.str());
    if (!ok) {
        std::string first;
        for (const auto &n : names)
            for (const auto &i : validate(s.curves.at(n), cx, balancing_mode(o.balancing)).issues)
                if (first.empty()) first = std::string(issue_name(i.kind)) + " at " + i.subject + ": " + i.message;
        fail(ErrorCategory::Validation, "curve is invalid: " + first);
    }
    return 0;
}

int cmd_cut(const Scenario &s, const Options &o, std::ostream &out) {
    std::string name;
    const auto &c = pick_curve(s, o, name);
    const auto comps = cut(c, cut_points_for(s, name, c));
    Json a = Json::array();
    std::ostringstream t;
    t << comps.size() << " components\n";
    for (const auto &k : comps) {
        a.push_back(to_json(k));
        t << "component " << k.vertex.id << " (genus " << k.vertex.genus << ", 2g-2+n = " << euler_exponent(k) << ")\n";
        for (const auto &e : k.cut_edges)
            t << "  " << e.id << " derivative " << e.derivative.to_string() << " length " << to_string(e.cut_length)
              << " evaluates to " << to_string(k.evaluation_point(e)) << "\n";
    }
    emit(out, o, Json{{"components", a}}, t.str());
    return 0;
}

int cmd_glue(const Scenario &s, const Options &o, std::ostream &out) {
    std::string name;
    const auto &c = pick_curve(s, o, name);
    const auto comps = cut(c, cut_points_for(s, name, c));
    const auto matching = induced_matching(comps);
    const TropicalCurve glued = glue(comps, matching, s.complex ? &*s.complex : nullptr);
    const bool iso = are_isomorphic(glued, c);
    Json pairs = Json::array();
    for (const auto &[a, b] : matching) pairs.push_back(Json::array({a, b}));
    std::ostringstream t;
    t << "glued " << comps.size() << " components along " << matching.size() << " pairs\n";
    t << "isomorphic to " << name << ": " << (iso ? "yes" : "no") << "\n";
    emit(out, o, Json{{"matching", pairs}, {"curve", to_json(glued)}, {"isomorphic", iso}}, t.str());
    if (!iso) fail(ErrorCategory::Gluing, "glued curve is not isomorphic to '" + name + "'");
    return 0;
}

int cmd_star(const Scenario &s, const Options &o, std::ostream &out) {
    std::string name;
    const auto &c = pick_curve(s, o, name);
    if (o.vertex.empty()) fail(ErrorCategory::Usage, "star needs --vertex");
    const StarCurve st = star(c, o.vertex, need_complex(s));
    std::ostringstream t;
    t << "star of " << o.vertex << " (genus " << st.genus << ") in a fan of " << st.fan.cones().size() << " cones\n";
    for (const auto &r : st.rays) t << "  " << r.id << " " << r.derivative.to_string() << "\n";
    emit(out, o, to_json(st), t.str());
    return 0;
}

int cmd_complete(const Scenario &s, const Options &o, std::ostream &out) {
    if (o.point.empty()) fail(ErrorCategory::Usage, "complete needs --point x,y,...");
    const auto &cx = need_complex(s);
    const RationalPoint p = parse_point(o.point);
    const StratumLocation loc = stratum_containing(cx, p);
    const Fan fan = tangent_cone(cx, p);
    std::ostringstream t;
    t << "point " << to_string(p) << " lies in the open stratum of face " << loc.face << " (dimension " << loc.dimension << ")\n";
    t << "tangent cone: " << fan.cones().size() << " cones\n";
    for (const auto &c : fan.cones()) t << "  " << c.face << ": " << describe(c.cone) << "\n";
    emit(out, o, Json{{"stratum", to_json(loc)}, {"fan", to_json(fan)}}, t.str());
    return 0;
}

int cmd_rend(const Scenario &s, const Options &o, std::ostream &out) {
    std::string name;
    const auto &c = pick_curve(s, o, name);
    const auto &cx = need_complex(s);
    const auto comps = rend_gamma(cx, c);
    const auto diagram = gluing_diagram(cx, c, cut(c, cut_points_for(s, name, c)));
    Json a = Json::array();
    std::ostringstream t;
    t << "evaluation components of " << name << "\n";
    for (const auto &e : comps) {
        a.push_back(Json{{"edge", e.edge}, {"internal", e.internal}, {"component", to_json(e.component)}});
        t << "  " << e.edge << ": " << component_text(e.component) << "\n";
    }
    t << "diagonal: " << diagram.diagonal.size() << " pairs, real dimension " << diagram.diagonal_real_dimension << " into "
      << 2 * diagram.diagonal_real_dimension << "\n";
    for (const auto &p : diagram.diagonal) t << "  " << p.edge << ": " << p.tail_side.id() << " ~ " << p.head_side.id() << "\n";
    t << "outputs: " << diagram.outputs.size() << " ends\n";
    t << "forgotten: " << diagram.forgotten.size() << " factors, fiber real dimension " << diagram.forgotten_real_dimension << "\n";
    emit(out, o, Json{{"components", a}, {"diagram", to_json(diagram)}}, t.str());
    return 0;
}

int cmd_glue_classes(const Scenario &s, const Options &o, std::ostream &out) {
    std::string name;
    const auto &c = pick_curve(s, o, name);
    const auto &cx = need_complex(s);
    auto inv = s.invariants.find(name);
    if (inv == s.invariants.end()) fail(ErrorCategory::Usage, "no invariants given for curve '" + name + "'");
    long shift = o.descendant_shift;
    if (shift < 0) {
        shift = 0;
        if (s.requests.contains("glue-classes") && s.requests["glue-classes"].contains("descendant_shift"))
            shift = s.requests["glue-classes"]["descendant_shift"].get<long>();
    }
    const auto diagram = gluing_diagram(cx, c, cut(c, cut_points_for(s, name, c)));
    const GluingResult r = glue_classes_detailed(c, diagram, inv->second, shift);
    std::ostringstream t;
    t << "k_gamma: " << to_string(r.k_gamma) << "\n";
    t << "aut_order: " << to_string(r.aut_order) << "\n";
    t << "lattice_factor: " << to_string(r.lattice_factor) << "\n";
    t << "degree_sum: " << r.degree_sum << "\n";
    t << "forgotten_real_dimension: " << r.forgotten_dimension << "\n";
    t << "coefficient: " << to_string(r.cls.coefficient) << "\n";
    t << "hbar_exponent: " << r.cls.hbar_exponent << "\n";
    t << "degree: " << r.cls.degree << "\n";
    t << "q_exponent: " << to_string(r.cls.q_exponent) << "\n";
    t << "class: " << class_text(r.cls) << "\n";
    emit(out, o, to_json(r), t.str());
    return 0;
}

int cmd_enumerate(const Scenario &s, const Options &o, std::ostream &out, std::ostream &err) {
    if (!s.constraints) fail(ErrorCategory::Usage, "the scenario has no constraints block");
    EnumerationOptions opts;
    opts.budget = o.budget;
    if (s.reference_curve) opts.reference = s.curves.at(*s.reference_curve);
    const EnumerationResult r = enumerate_rigid(need_complex(s), *s.constraints, opts);
    std::ostringstream t;
    t << "class degree " << r.class_degree << ", " << r.records.size() << " rigid curves, total multiplicity "
      << to_string(r.total_multiplicity) << "\n";
    if (s.reference_curve)
        t << "multiplicity with the tropical type of " << *s.reference_curve << ": " << to_string(r.reference_multiplicity) << "\n";
    std::size_t i = 0;
    for (const auto &rec : r.records) {
        t << "  #" << ++i << " multiplicity " << to_string(rec.multiplicity) << ", " << rec.curve.vertices().size()
          << " vertices, max entry " << to_string(rec.max_entry) << (rec.matches_reference ? ", reference type" : "")
          << (rec.coarse_in_complex ? "" : ", coarse curve leaves the complex") << "\n";
        t << "     " << rec.encoding << "\n";
    }
    for (const auto &w : r.warnings) err << "warning: " << w << "\n";
    emit(out, o, to_json(r), t.str());
    return 0;
}

int cmd_ledger(const Scenario &s, const Options &o, std::ostream &out) {
    std::string name;
    const auto &c = pick_curve(s, o, name);
    std::vector<VertexInvariant> inv;
    if (auto it = s.invariants.find(name); it != s.invariants.end()) inv = it->second;
    const LedgerReport r = euler_ledger(c, inv);
    std::ostringstream t;
    std::string sum;
    for (const auto &v : r.vertices) {
        t << v.vertex << ": g=" << v.genus << " n=" << v.valence << " 2g-2+n=" << v.expected;
        if (v.hbar) t << " hbar=" << *v.hbar;
        t << "\n";
        sum += (sum.empty() ? "" : "+") + std::to_string(v.hbar.value_or(v.expected));
    }
    t << "total: " << sum << " = " << r.total << " = 2g-2+n = " << r.expected << "\n";
    t << "separating edges: " << std::count_if(r.edges.begin(), r.edges.end(), [](const LedgerEdge &e) { return e.separating; })
      << ", non-separating edges: "
      << std::count_if(r.edges.begin(), r.edges.end(), [](const LedgerEdge &e) { return !e.separating; }) << "\n";
    emit(out, o, to_json(r), t.str());
    return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact tropical gluing computations on scenario files", "tropgw"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"validate", "check the complex and curves"},
        {"cut", "cut a curve at its cut points"},
        {"glue", "glue the cut components back together"},
        {"star", "star curve of a vertex in its tangent cone"},
        {"complete", "stratum and tangent cone at a point"},
        {"rend", "evaluation components and gluing diagram"},
        {"glue-classes", "evaluate the gluing formula"},
        {"enumerate", "enumerate rigid curves through the constraint points"},
        {"ledger", "Euler characteristic bookkeeping"},
    };
    for (const auto &[name, help] : commands) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--scenario", o.scenario, "scenario file")->required();
        sub->add_option("--curve", o.curve, "curve name");
        sub->add_option("--emit-diagram", o.emit_diagram, "write an SVG drawing of the complex and curve");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        if (name == "validate")
            sub->add_option("--balancing", o.balancing, "balancing check")->check(CLI::IsMember({"on", "off", "interior-only"}));
        if (name == "star") sub->add_option("--vertex", o.vertex, "vertex id")->required();
        if (name == "complete") sub->add_option("--point", o.point, "comma-separated rational coordinates")->required();
        if (name == "enumerate") sub->add_option("--budget", o.budget, "maximal number of partial curves");
        if (name == "glue-classes")
            sub->add_option("--descendant-shift", o.descendant_shift, "extra cohomological degree")->check(CLI::NonNegativeNumber);
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        err << "error: " << category_name(ErrorCategory::Usage) << ": " << e.what() << "\n";
        return exit_code(ErrorCategory::Usage);
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const Scenario s = load_scenario(o.scenario);
        int code = 0;
        if (command == "validate") code = cmd_validate(s, o, out);
        else if (command == "cut") code = cmd_cut(s, o, out);
        else if (command == "glue") code = cmd_glue(s, o, out);
        else if (command == "star") code = cmd_star(s, o, out);
        else if (command == "complete") code = cmd_complete(s, o, out);
        else if (command == "rend") code = cmd_rend(s, o, out);
        else if (command == "glue-classes") code = cmd_glue_classes(s, o, out);
        else if (command == "enumerate") code = cmd_enumerate(s, o, out, err);
        else if (command == "ledger") code = cmd_ledger(s, o, out);
        if (!o.emit_diagram.empty()) {
            const TropicalCurve *curve = nullptr;
            std::string name;
            if (!s.curves.empty() && (!o.curve.empty() || s.curves.size() == 1)) curve = &pick_curve(s, o, name);
            std::ofstream svg(o.emit_diagram);
            if (!svg) fail(ErrorCategory::Usage, "cannot write " + o.emit_diagram);
            svg << render_svg(need_complex(s), curve);
        }
        return code;
    } catch (const Error &e) {
        err << "error: " << category_name(e.category()) << ": " << e.what() << "\n";
        return exit_code(e.category());
    }
}

} // namespace tropgw::cli
