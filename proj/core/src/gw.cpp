#include "tropgw/gw.hpp"

#include "tropgw/errors.hpp"

#include <algorithm>

namespace tropgw {

std::string to_string(const EnergyExponent &q) {
    std::string out;
    for (const auto &[symbol, c] : q) {
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const Integer a = abs(c);
        if (a != 1) out += to_string(a);
        out += symbol;
    }
    return out.empty() ? "0" : out;
}

void check_class(const GWClass &c) {
    if (c.degree < 0 || c.degree % 2 != 0)
        fail(ErrorCategory::Validation, "class degree " + std::to_string(c.degree) + " is not a nonnegative even number");
    if (c.toric)
        for (const auto &[edge, row] : c.toric->weight_rows)
            if (row.dim() != c.toric->rank)
                fail(ErrorCategory::Validation, "weight row on '" + edge + "' has length " + std::to_string(row.dim()) +
                                                    ", torus rank is " + std::to_string(c.toric->rank));
}

namespace {

GWClass zero_class(long hbar, EnergyExponent q) {
    GWClass z;
    z.coefficient = 0;
    z.hbar_exponent = hbar;
    z.q_exponent = std::move(q);
    return z;
}

long vertex_euler(const TropicalCurve &curve, const CurveVertex &v) {
    return 2 * static_cast<long>(v.genus) - 2 + static_cast<long>(curve.valence(v.id));
}

} // namespace

GluingResult glue_classes_detailed(const TropicalCurve &curve, const GluingDiagram &diagram,
                                   const std::vector<VertexInvariant> &invariants, long descendant_degree_shift) {
    if (descendant_degree_shift < 0) fail(ErrorCategory::Precondition, "descendant degree shift must be nonnegative");
    std::map<std::string, const VertexInvariant *> by_vertex;
    for (const auto &inv : invariants) {
        curve.vertex_index(inv.vertex);
        if (!by_vertex.emplace(inv.vertex, &inv).second)
            fail(ErrorCategory::Precondition, "two invariants for vertex '" + inv.vertex + "'");
        check_class(inv.cls);
    }
    for (const auto &v : curve.vertices())
        if (!by_vertex.contains(v.id)) fail(ErrorCategory::Precondition, "no invariant for vertex '" + v.id + "'");

    std::string bad;
    long hbar = 0;
    for (const auto &v : curve.vertices()) {
        const VertexInvariant &inv = *by_vertex.at(v.id);
        const long expected = vertex_euler(curve, v);
        if (inv.cls.hbar_exponent != expected || inv.euler_check != expected)
            bad += (bad.empty() ? "" : ", ") + v.id + " (hbar " + std::to_string(inv.cls.hbar_exponent) + ", expected " +
                   std::to_string(expected) + ")";
        hbar += inv.cls.hbar_exponent;
    }
    if (!bad.empty()) fail(ErrorCategory::Bookkeeping, "hbar exponents disagree with 2g-2+n at " + bad);
    if (hbar != euler_exponent(curve))
        fail(ErrorCategory::Bookkeeping, "hbar exponents sum to " + std::to_string(hbar) + ", curve has 2g-2+n = " +
                                             std::to_string(euler_exponent(curve)));

    const ToricDatum *toric = nullptr;
    std::string toric_vertex;
    std::set<std::string> generators;
    EnergyExponent q;
    Rational product = 1;
    long degree_sum = descendant_degree_shift;
    for (const auto &v : curve.vertices()) {
        const GWClass &c = by_vertex.at(v.id)->cls;
        if (c.toric) {
            if (toric)
                fail(ErrorCategory::UnsupportedRegime, "toric data at both '" + toric_vertex + "' and '" + v.id +
                                                           "'; only one toric vertex is supported");
            toric = &*c.toric;
            toric_vertex = v.id;
        }
        for (const auto &g : c.fiber_generators) {
            if (!curve.edge_index(g))
                fail(ErrorCategory::Precondition, "fiber generator on '" + g + "', which is not an internal edge");
            if (!generators.insert(g).second)
                fail(ErrorCategory::DegreeMismatch, "two fiber generators on edge '" + g + "'");
        }
        for (const auto &[sym, k] : c.q_exponent) q[sym] += k;
        product *= c.coefficient;
        degree_sum += c.degree;
    }
    if (toric)
        for (const auto &[edge, row] : toric->weight_rows)
            if (!curve.edge_index(edge))
                fail(ErrorCategory::Precondition, "weight row on '" + edge + "', which is not an internal edge");

    GluingResult r;
    r.k_gamma = k_gamma(curve);
    r.aut_order = aut_order(curve);
    r.degree_sum = degree_sum;
    r.forgotten_dimension = diagram.forgotten_real_dimension;

    // Rows in the curve's edge order.
    std::vector<IntegralVector> rows;
    for (const auto &e : curve.internal_edges()) {
        if (!generators.contains(e.id)) continue;
        if (!toric || !toric->weight_rows.contains(e.id))
            fail(ErrorCategory::DegreeMismatch, "fiber generator on '" + e.id + "' has no toric weight row to pair with");
        rows.push_back(toric->weight_rows.at(e.id));
    }
    const std::size_t k = toric ? toric->rank : 0;
    if (rows.size() != k)
        fail(ErrorCategory::DegreeMismatch, std::to_string(rows.size()) + " fiber generators against torus rank " +
                                                std::to_string(k));
    r.lattice_factor = k == 0 ? Integer(1) : abs_det(IntegerMatrix::from_rows(rows, k));

    const long degree = degree_sum - diagram.forgotten_real_dimension;
    if (r.k_gamma == 0 || r.lattice_factor == 0 || product == 0 || degree < 0) {
        r.cls = zero_class(hbar, std::move(q));
        return r;
    }
    r.cls.coefficient = Rational(r.k_gamma) / Rational(r.aut_order) * Rational(r.lattice_factor) * product;
    r.cls.coefficient.canonicalize();
    r.cls.hbar_exponent = hbar;
    r.cls.q_exponent = std::move(q);
    r.cls.degree = degree;
    return r;
}

long chern_shift(long rank) {
    if (rank < 0) fail(ErrorCategory::Precondition, "bundle rank must be nonnegative");
    return 2 * rank;
}

LedgerReport euler_ledger(const TropicalCurve &curve, const std::vector<VertexInvariant> &invariants) {
    LedgerReport r;
    r.expected = euler_exponent(curve);
    std::map<std::string, long> hbar;
    for (const auto &inv : invariants) {
        curve.vertex_index(inv.vertex);
        hbar[inv.vertex] = inv.cls.hbar_exponent;
    }
    if (!invariants.empty() && hbar.size() != curve.vertices().size())
        fail(ErrorCategory::Ledger, "the ledger needs exactly one invariant per vertex");
    std::string bad;
    for (const auto &v : curve.vertices()) {
        LedgerVertex lv{v.id, v.genus, curve.valence(v.id), vertex_euler(curve, v), std::nullopt};
        if (hbar.contains(v.id)) {
            lv.hbar = hbar.at(v.id);
            if (*lv.hbar != lv.expected)
                bad += (bad.empty() ? "" : ", ") + v.id + " (" + std::to_string(*lv.hbar) + " vs " + std::to_string(lv.expected) + ")";
        }
        r.total += lv.hbar.value_or(lv.expected);
        r.vertices.push_back(std::move(lv));
    }
    if (!bad.empty()) fail(ErrorCategory::Ledger, "hbar exponents differ from 2g_v-2+n_v at " + bad);
    if (r.total != r.expected)
        fail(ErrorCategory::Ledger, "vertex contributions sum to " + std::to_string(r.total) + ", expected " +
                                        std::to_string(r.expected));

    const std::size_t base = curve.connected_components().size();
    for (std::size_t i = 0; i < curve.internal_edges().size(); ++i) {
        const auto &e = curve.internal_edges()[i];
        std::vector<InternalEdge> rest;
        for (std::size_t j = 0; j < curve.internal_edges().size(); ++j)
            if (j != i) rest.push_back(curve.internal_edges()[j]);
        const TropicalCurve without(curve.vertices(), std::move(rest), {});
        LedgerEdge le{e.id, without.connected_components().size() > base, e.tail == e.head};
        r.genus_reduction |= !le.separating;
        r.splitting |= le.separating;
        r.edges.push_back(std::move(le));
    }
    return r;
}

} // namespace tropgw
