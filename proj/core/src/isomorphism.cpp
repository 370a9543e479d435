#include "tropgw/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace tropgw {

namespace {

struct EdgeKey {
    IntegralVector derivative;
    Rational length;
    std::string label;

    friend bool operator==(const EdgeKey &, const EdgeKey &) = default;
    friend bool operator<(const EdgeKey &x, const EdgeKey &y) {
        if (auto c = x.derivative <=> y.derivative; c != 0) return c < 0;
        if (x.length != y.length) return x.length < y.length;
        return x.label < y.label;
    }
};

using KeyList = std::vector<EdgeKey>;

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

// Ways to match two equal sorted lists element by element.
Integer matchings(const KeyList &sorted) {
    Integer ways = 1;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        ways *= factorial(j - i);
        i = j;
    }
    return ways;
}

struct Prepared {
    std::size_t n = 0;
    std::map<std::pair<std::size_t, std::size_t>, KeyList> between; // oriented from first to second
    std::vector<KeyList> ends;
    std::vector<unsigned> genus;
    std::vector<RationalPoint> position;

    const KeyList &edges(std::size_t i, std::size_t k) const {
        static const KeyList empty;
        auto it = between.find({i, k});
        return it == between.end() ? empty : it->second;
    }
};

Prepared prepare(const TropicalCurve &c, const IsomorphismOptions &opt) {
    Prepared p;
    p.n = c.vertices().size();
    p.ends.resize(p.n);
    for (const auto &v : c.vertices()) {
        p.genus.push_back(v.genus);
        p.position.push_back(v.position);
    }
    for (const auto &e : c.internal_edges()) {
        const std::size_t t = c.vertex_index(e.tail);
        const std::size_t h = c.vertex_index(e.head);
        const Rational len = opt.compare_lengths ? e.length : Rational(0);
        if (t == h) {
            p.between[{t, t}].push_back({std::max(e.derivative, -e.derivative), len, ""});
        } else {
            p.between[{t, h}].push_back({e.derivative, len, ""});
            p.between[{h, t}].push_back({-e.derivative, len, ""});
        }
    }
    for (const auto &e : c.ends())
        p.ends[c.vertex_index(e.vertex)].push_back({e.derivative, Rational(0), opt.match_end_labels ? e.label : ""});
    for (auto &[k, list] : p.between) std::sort(list.begin(), list.end());
    for (auto &list : p.ends) std::sort(list.begin(), list.end());
    return p;
}

struct Search {
    const Prepared &a;
    const Prepared &b;
    const IsomorphismOptions &opt;
    std::vector<std::size_t> sigma;
    std::vector<bool> taken;
    Integer total = 0;
    bool stop_at_first = false;

    bool compatible(std::size_t i, std::size_t j) const {
        if (a.genus[i] != b.genus[j]) return false;
        if (opt.compare_positions && a.position[i] != b.position[j]) return false;
        if (a.ends[i] != b.ends[j]) return false;
        if (a.edges(i, i) != b.edges(j, j)) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (a.edges(i, k) != b.edges(j, sigma[k])) return false;
        return true;
    }

    Integer weight() const {
        Integer w = 1;
        for (std::size_t i = 0; i < a.n; ++i) {
            w *= matchings(a.ends[i]);
            const KeyList &loops = a.edges(i, i);
            w *= matchings(loops);
            for (const auto &l : loops)
                if (l.derivative.is_zero()) w *= 2;
            for (std::size_t k = i + 1; k < a.n; ++k) w *= matchings(a.edges(i, k));
        }
        return w;
    }

    void run(std::size_t i) {
        if (stop_at_first && total > 0) return;
        if (i == a.n) {
            total += 1;
            return;
        }
        for (std::size_t j = 0; j < b.n; ++j) {
            if (taken[j]) continue;
            sigma[i] = j;
            if (!compatible(i, j)) continue;
            taken[j] = true;
            run(i + 1);
            taken[j] = false;
        }
    }
};

Integer search(const TropicalCurve &x, const TropicalCurve &y, const IsomorphismOptions &opt, bool first_only) {
    if (x.vertices().size() != y.vertices().size() || x.internal_edges().size() != y.internal_edges().size() ||
        x.ends().size() != y.ends().size() || x.ambient_dim() != y.ambient_dim())
        return 0;
    const Prepared a = prepare(x, opt);
    const Prepared b = prepare(y, opt);
    Search s{a, b, opt, std::vector<std::size_t>(a.n), std::vector<bool>(a.n, false), 0, first_only};
    s.run(0);
    // Every vertex bijection admits the same number of edge matchings.
    return s.total == 0 ? Integer(0) : Integer(s.total * s.weight());
}

} // namespace

Integer count_isomorphisms(const TropicalCurve &a, const TropicalCurve &b, const IsomorphismOptions &options) {
    return search(a, b, options, false);
}

bool are_isomorphic(const TropicalCurve &a, const TropicalCurve &b, const IsomorphismOptions &options) {
    return search(a, b, options, true) != 0;
}

} // namespace tropgw
