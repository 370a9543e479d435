#include "tropgw/enumerate.hpp"

#include "tropgw/errors.hpp"
#include "tropgw/isomorphism.hpp"
#include "tropgw/linear_system.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <numeric>
#include <set>

namespace tropgw {

namespace {

using Vec = std::array<Rational, 2>;
using Dir = std::array<long, 2>;
using Counts = std::vector<int>;

Rational cross(const Vec &a, const Dir &d) { return a[0] * d[1] - a[1] * d[0]; }
long cross(const Dir &a, const Dir &b) { return a[0] * b[1] - a[1] * b[0]; }
Dir operator+(const Dir &a, const Dir &b) { return {a[0] + b[0], a[1] + b[1]}; }
Dir operator-(const Dir &a) { return {-a[0], -a[1]}; }
bool is_zero(const Dir &d) { return d[0] == 0 && d[1] == 0; }
long max_entry(const Dir &d) { return std::max(std::labs(d[0]), std::labs(d[1])); }
IntegralVector to_vector(const Dir &d) { return IntegralVector{d[0], d[1]}; }

Vec along(const Vec &s, const Dir &d, const Rational &t) { return {s[0] + t * d[0], s[1] + t * d[1]}; }

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Leaf: marked point `point`, path `a` leaving it against `dir`.
// Merge: rooted pieces a, b meeting at a new vertex.
// Step: the path meets rooted piece a, then continues as b.
// End: the path leaves along fan ray `ray`.
struct Node {
    enum class Kind { Leaf, Merge, Step, End } kind;
    Dir dir{};
    int point = -1;
    int ray = -1;
    NodePtr a, b;
};

struct Rooted {
    Vec start;
    Dir dir; // from the piece's root vertex towards the rest of the curve
    Integer multiplicity;
    NodePtr node;
};

struct PathResult {
    Integer multiplicity;
    NodePtr node;
};

struct WholeCurve {
    Dir first_direction;
    Integer multiplicity;
    NodePtr side_a, side_b;
};

void sub_multisets(const Counts &e, int size, std::size_t i, Counts &cur, std::vector<Counts> &out) {
    if (i == e.size()) {
        if (size == 0) out.push_back(cur);
        return;
    }
    for (int k = 0; k <= std::min(e[i], size); ++k) {
        cur[i] = k;
        sub_multisets(e, size - k, i + 1, cur, out);
    }
    cur[i] = 0;
}

std::vector<Counts> sub_multisets(const Counts &e, int size) {
    std::vector<Counts> out;
    Counts cur(e.size(), 0);
    sub_multisets(e, size, 0, cur, out);
    return out;
}

Counts minus(const Counts &a, const Counts &b) {
    Counts r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

int total(const Counts &e) { return std::accumulate(e.begin(), e.end(), 0); }

class Search {
  public:
    Search(std::vector<Vec> points, std::vector<Dir> fan, long bound, std::size_t budget)
        : pts_(std::move(points)), fan_(std::move(fan)), bound_(bound), budget_(budget) {}

    std::vector<WholeCurve> run(int class_degree) {
        const int n = static_cast<int>(pts_.size());
        const Counts all(fan_.size(), class_degree);
        const std::uint32_t others = ((std::uint32_t{1} << n) - 1) & ~std::uint32_t{1};
        std::vector<WholeCurve> out;
        for (std::uint32_t qa = others;; qa = (qa - 1) & others) {
            const std::uint32_t qb = others & ~qa;
            for (const Counts &ea : sub_multisets(all, std::popcount(qa) + 1)) {
                const Counts eb = minus(all, ea);
                if (total(eb) != std::popcount(qb) + 1) continue;
                // Each unordered split once.
                if (std::make_pair(qa, ea) > std::make_pair(qb, eb)) continue;
                const Dir u = sum(ea);
                if (is_zero(u) || max_entry(u) > bound_) continue;
                auto a = pointed(pts_[0], u, qa, ea);
                if (a.empty()) continue;
                auto b = pointed(pts_[0], -u, qb, eb);
                for (const auto &x : a)
                    for (const auto &y : b) out.push_back(WholeCurve{u, x.multiplicity * y.multiplicity, x.node, y.node});
            }
            if (qa == 0) break;
        }
        return out;
    }

    std::size_t pieces() const { return pieces_; }
    const std::set<std::string> &warnings() const { return warnings_; }

  private:
    Dir sum(const Counts &e) const {
        Dir s{0, 0};
        for (std::size_t i = 0; i < e.size(); ++i) s = s + Dir{e[i] * fan_[i][0], e[i] * fan_[i][1]};
        return s;
    }

    void count_piece() {
        if (++pieces_ > budget_)
            fail(ErrorCategory::Budget, "enumeration exceeded the budget of " + std::to_string(budget_) + " pieces");
    }

    // Meeting point of two rays, both strictly ahead of their starts.
    std::optional<Vec> meet(const Vec &s1, const Dir &d1, const Vec &s2, const Dir &d2) {
        const long det = cross(d1, d2);
        const Vec r{s2[0] - s1[0], s2[1] - s1[1]};
        if (det == 0) {
            if (cross(r, d1) == 0)
                warnings_.insert("collinear rays from " + to_string(RationalPoint{s1[0], s1[1]}) + " and " +
                                 to_string(RationalPoint{s2[0], s2[1]}) + ": the constraints are not generic");
            return std::nullopt;
        }
        const Rational t1 = cross(r, d2) / Rational(det);
        const Rational t2 = cross(r, d1) / Rational(det);
        if (t1 <= 0 || t2 <= 0) return std::nullopt;
        return along(s1, d1, t1);
    }

    const std::vector<Rooted> &rooted(std::uint32_t q, const Counts &e) {
        auto key = std::make_pair(q, e);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<Rooted> res;
        const Dir dir = -sum(e);
        if (!is_zero(dir) && max_entry(dir) <= bound_) {
            for (std::uint32_t rest = q; rest; rest &= rest - 1) {
                const int p = std::countr_zero(rest);
                for (auto &tail : pointed(pts_[p], -dir, q & ~(std::uint32_t{1} << p), e)) {
                    count_piece();
                    res.push_back(Rooted{pts_[p], dir, tail.multiplicity,
                                         std::make_shared<Node>(Node{Node::Kind::Leaf, dir, p, -1, tail.node, nullptr})});
                }
            }
            const std::uint32_t low = q & (~q + 1);
            const std::uint32_t others = q & ~low;
            for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
                const std::uint32_t q1 = low | sub;
                const std::uint32_t q2 = q & ~q1;
                if (q2 != 0) {
                    for (const Counts &e1 : sub_multisets(e, std::popcount(q1))) {
                        const auto &as = rooted(q1, e1);
                        if (as.empty()) continue;
                        const auto &bs = rooted(q2, minus(e, e1));
                        for (const auto &a : as)
                            for (const auto &b : bs) {
                                const long det = cross(a.dir, b.dir);
                                if (det == 0 && !is_zero(a.dir)) {
                                    meet(a.start, a.dir, b.start, b.dir);
                                    continue;
                                }
                                auto v = meet(a.start, a.dir, b.start, b.dir);
                                if (!v) continue;
                                count_piece();
                                res.push_back(Rooted{*v, dir, a.multiplicity * b.multiplicity * std::labs(det),
                                                     std::make_shared<Node>(Node{Node::Kind::Merge, dir, -1, -1, a.node, b.node})});
                            }
                    }
                }
                if (sub == 0) break;
            }
        }
        return memo_.emplace(std::move(key), std::move(res)).first->second;
    }

    std::vector<PathResult> pointed(const Vec &start, const Dir &dir, std::uint32_t q, const Counts &e) {
        std::vector<PathResult> out;
        if (q == 0) {
            if (total(e) == 1) {
                const auto i = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
                if (fan_[i] == dir) {
                    count_piece();
                    out.push_back(PathResult{1, std::make_shared<Node>(Node{Node::Kind::End, dir, -1, static_cast<int>(i), nullptr, nullptr})});
                }
            }
            return out;
        }
        for (std::uint32_t q1 = q; q1; q1 = (q1 - 1) & q) {
            for (const Counts &e1 : sub_multisets(e, std::popcount(q1))) {
                const auto &pieces = rooted(q1, e1);
                if (pieces.empty()) continue;
                const Counts e2 = minus(e, e1);
                for (std::size_t k = 0; k < pieces.size(); ++k) {
                    const Rooted p = pieces[k];
                    const long det = cross(dir, p.dir);
                    auto v = meet(start, dir, p.start, p.dir);
                    if (!v) continue;
                    const Dir next = dir + p.dir;
                    if (is_zero(next) || max_entry(next) > bound_) continue;
                    for (auto &tail : pointed(*v, next, q & ~q1, e2)) {
                        count_piece();
                        out.push_back(PathResult{p.multiplicity * tail.multiplicity * std::labs(det),
                                                 std::make_shared<Node>(Node{Node::Kind::Step, dir, -1, -1, p.node, tail.node})});
                    }
                }
            }
        }
        return out;
    }

    std::vector<Vec> pts_;
    std::vector<Dir> fan_;
    long bound_;
    std::size_t budget_;
    std::size_t pieces_ = 0;
    std::map<std::pair<std::uint32_t, Counts>, std::vector<Rooted>> memo_;
    std::set<std::string> warnings_;
};

// Graph of a curve realized from a search tree for given point positions.
struct RawGraph {
    struct Edge {
        std::size_t tail, head;
        Dir dir;
    };
    struct End {
        std::size_t vertex;
        Dir dir;
        int point = -1; // marked end of that point, or -1 for an unbounded end
    };
    std::vector<Vec> pos;
    std::vector<int> marked; // point index per vertex, or -1
    std::vector<Edge> edges;
    std::vector<End> ends;
};

class Realizer {
  public:
    explicit Realizer(const std::vector<Vec> &pts) : pts_(pts) {}

    RawGraph build(const WholeCurve &w) {
        const std::size_t p0 = marked_vertex(0);
        path(*w.side_a, p0, pts_[0], w.first_direction);
        path(*w.side_b, p0, pts_[0], -w.first_direction);
        return std::move(g_);
    }

  private:
    struct Root {
        std::size_t vertex;
        Vec pos;
        Dir dir;
    };

    std::size_t add_vertex(const Vec &p, int point) {
        g_.pos.push_back(p);
        g_.marked.push_back(point);
        return g_.pos.size() - 1;
    }

    std::size_t marked_vertex(int point) {
        const std::size_t v = add_vertex(pts_[point], point);
        g_.ends.push_back({v, {0, 0}, point});
        return v;
    }

    // Unlike the search, no positivity checks: limits may have zero lengths.
    static Vec intersect(const Vec &s1, const Dir &d1, const Vec &s2, const Dir &d2) {
        const Vec r{s2[0] - s1[0], s2[1] - s1[1]};
        return along(s1, d1, cross(r, d2) / Rational(cross(d1, d2)));
    }

    Root rooted(const Node &n) {
        if (n.kind == Node::Kind::Leaf) {
            const std::size_t v = marked_vertex(n.point);
            path(*n.a, v, pts_[n.point], -n.dir);
            return {v, pts_[n.point], n.dir};
        }
        const Root a = rooted(*n.a);
        const Root b = rooted(*n.b);
        const Vec p = intersect(a.pos, a.dir, b.pos, b.dir);
        const std::size_t w = add_vertex(p, -1);
        g_.edges.push_back({a.vertex, w, a.dir});
        g_.edges.push_back({b.vertex, w, b.dir});
        return {w, p, n.dir};
    }

    void path(const Node &n, std::size_t from, const Vec &pos, const Dir &dir) {
        if (n.kind == Node::Kind::End) {
            g_.ends.push_back({from, dir, -1});
            return;
        }
        const Root p = rooted(*n.a);
        const Vec v = intersect(pos, dir, p.pos, p.dir);
        const std::size_t w = add_vertex(v, -1);
        g_.edges.push_back({from, w, dir});
        g_.edges.push_back({p.vertex, w, p.dir});
        path(*n.b, w, v, dir + p.dir);
    }

    const std::vector<Vec> &pts_;
    RawGraph g_;
};

Rational edge_length(const Vec &tail, const Vec &head, const Dir &d) {
    const Rational dot = (head[0] - tail[0]) * d[0] + (head[1] - tail[1]) * d[1];
    return dot / Rational(d[0] * d[0] + d[1] * d[1]);
}

std::string point_label(const ConstraintSet &c, int i) {
    const auto &l = c.points[static_cast<std::size_t>(i)].label;
    return l.empty() ? "p" + std::to_string(i) : l;
}

TropicalCurve world_curve(const RawGraph &g, const ConstraintSet &c) {
    std::vector<CurveVertex> vs;
    for (std::size_t i = 0; i < g.pos.size(); ++i) {
        const std::string id = g.marked[i] >= 0 ? "p" + std::to_string(g.marked[i]) : "w" + std::to_string(i);
        vs.push_back(CurveVertex{id, {g.pos[i][0], g.pos[i][1]}, 0});
    }
    std::vector<InternalEdge> es;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto &e = g.edges[i];
        es.push_back(InternalEdge{"e" + std::to_string(i), vs[e.tail].id, vs[e.head].id,
                                  edge_length(g.pos[e.tail], g.pos[e.head], e.dir), to_vector(e.dir)});
    }
    std::vector<CurveEnd> ends;
    std::size_t unbounded = 0;
    for (const auto &e : g.ends) {
        if (e.point >= 0) {
            const std::string label = point_label(c, e.point);
            ends.push_back(CurveEnd{"m" + std::to_string(e.point), vs[e.vertex].id, to_vector(e.dir), label});
        } else {
            const std::string id = "u" + std::to_string(unbounded++);
            ends.push_back(CurveEnd{id, vs[e.vertex].id, to_vector(e.dir), id});
        }
    }
    return TropicalCurve(std::move(vs), std::move(es), std::move(ends));
}

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

TropicalCurve coarse_curve(const RawGraph &g, const ConstraintSet &c) {
    const std::size_t n = g.pos.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &e : g.edges)
        if (g.pos[e.tail] == g.pos[e.head]) {
            const std::size_t a = find_root(parent, e.tail), b = find_root(parent, e.head);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    // Working graph over group representatives.
    struct Edge {
        std::size_t tail, head;
        Dir dir;
        Rational length;
        bool alive = true;
    };
    std::vector<Edge> edges;
    for (const auto &e : g.edges) {
        const std::size_t t = find_root(parent, e.tail), h = find_root(parent, e.head);
        if (t == h) continue;
        edges.push_back({t, h, e.dir, edge_length(g.pos[e.tail], g.pos[e.head], e.dir)});
    }
    std::map<std::size_t, std::vector<std::string>> marks;
    for (const auto &e : g.ends)
        if (e.point >= 0) marks[find_root(parent, e.vertex)].push_back(point_label(c, e.point));

    // Smooth straight 2-valent vertices without ends.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < n && !changed; ++v) {
            if (find_root(parent, v) != v || marks.contains(v)) continue;
            std::vector<std::size_t> inc;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (edges[i].alive && (edges[i].tail == v || edges[i].head == v)) inc.push_back(i);
            if (inc.size() != 2) continue;
            auto out_dir = [&](const Edge &e) { return e.tail == v ? e.dir : -e.dir; };
            auto other = [&](const Edge &e) { return e.tail == v ? e.head : e.tail; };
            Edge &e1 = edges[inc[0]];
            Edge &e2 = edges[inc[1]];
            if (out_dir(e1) != -out_dir(e2)) continue;
            const Edge merged{other(e1), other(e2), out_dir(e2), e1.length + e2.length};
            e1.alive = e2.alive = false;
            edges.push_back(merged);
            changed = true;
        }
    }

    std::set<std::size_t> used;
    for (const auto &e : edges)
        if (e.alive) used.insert(e.tail), used.insert(e.head);
    for (const auto &[v, labels] : marks) used.insert(v);
    std::map<std::size_t, std::string> id;
    std::vector<CurveVertex> vs;
    for (std::size_t v : used) {
        id[v] = "c" + std::to_string(vs.size());
        vs.push_back(CurveVertex{id[v], {g.pos[v][0], g.pos[v][1]}, 0});
    }
    std::vector<InternalEdge> es;
    for (const auto &e : edges)
        if (e.alive)
            es.push_back(InternalEdge{"f" + std::to_string(es.size()), id[e.tail], id[e.head], e.length, to_vector(e.dir)});
    std::vector<CurveEnd> ends;
    for (const auto &[v, labels] : marks)
        for (const auto &l : labels) ends.push_back(CurveEnd{"m:" + l, id[v], IntegralVector(2), l});
    return TropicalCurve(std::move(vs), std::move(es), std::move(ends));
}

std::string encode(const TropicalCurve &c, const std::string &v, std::optional<std::size_t> parent) {
    std::vector<std::string> items;
    for (const auto &inc : c.incidences(v)) {
        if (inc.kind == Incidence::Kind::End) {
            const auto &e = c.ends()[inc.index];
            items.push_back(e.derivative.is_zero() ? "m:" + e.label : "u" + e.derivative.to_string());
            continue;
        }
        if (parent && inc.index == *parent) continue;
        const auto &e = c.internal_edges()[inc.index];
        const std::string &other = e.tail == v ? e.head : e.tail;
        items.push_back(inc.outgoing.to_string() + "(" + encode(c, other, inc.index) + ")");
    }
    std::sort(items.begin(), items.end());
    std::string out;
    for (const auto &s : items) out += (out.empty() ? "" : ",") + s;
    return out;
}

} // namespace

void check_constraints(const PolyhedralComplex &complex, const ConstraintSet &constraints) {
    std::map<FaceId, std::size_t> counts;
    for (std::size_t i = 0; i < constraints.points.size(); ++i) {
        const auto &p = constraints.points[i];
        const std::string name = "constraint point " + std::to_string(i);
        if (!complex.has_face(p.face)) fail(ErrorCategory::Validation, name + " names unknown face '" + p.face + "'");
        if (p.position.size() != complex.ambient_dim() || p.offset.size() != complex.ambient_dim())
            fail(ErrorCategory::Validation, name + " has the wrong dimension");
        if (!complex.face(p.face).polytope.contains(p.position))
            fail(ErrorCategory::Validation, name + " at " + to_string(p.position) + " is not in face '" + p.face + "'");
        ++counts[p.face];
    }
    if (!constraints.end_distribution.empty() && counts != constraints.end_distribution)
        fail(ErrorCategory::Validation, "constraint points do not follow the declared end distribution");
    if (constraints.degree_bound < 1) fail(ErrorCategory::Validation, "degree bound must be positive");
    if (constraints.scale <= 0) fail(ErrorCategory::Validation, "scale must be positive");
}

std::string type_encoding(const TropicalCurve &curve, const std::string &root) { return encode(curve, root, std::nullopt); }

std::size_t rigidity_rank(const TropicalCurve &curve, const std::vector<std::string> &fixed) {
    const std::size_t n = curve.vertices().size();
    std::vector<std::vector<Rational>> rows;
    for (const auto &id : fixed) {
        const std::size_t v = curve.vertex_index(id);
        for (std::size_t k = 0; k < 2; ++k) {
            std::vector<Rational> r(2 * n, Rational(0));
            r[2 * v + k] = 1;
            rows.push_back(std::move(r));
        }
    }
    for (const auto &e : curve.internal_edges()) {
        const std::size_t t = curve.vertex_index(e.tail), h = curve.vertex_index(e.head);
        std::vector<Rational> r(2 * n, Rational(0));
        const Rational dx(e.derivative[0]), dy(e.derivative[1]);
        r[2 * h] += dy;
        r[2 * h + 1] -= dx;
        r[2 * t] -= dy;
        r[2 * t + 1] += dx;
        rows.push_back(std::move(r));
    }
    return rational_rank(std::move(rows));
}

EnumerationResult enumerate_rigid(const PolyhedralComplex &complex, const ConstraintSet &constraints,
                                  const EnumerationOptions &options) {
    if (complex.ambient_dim() != 2) fail(ErrorCategory::Precondition, "enumeration needs a two-dimensional complex");
    check_constraints(complex, constraints);

    std::vector<Dir> fan;
    if (constraints.end_fan.empty()) fan = {{-1, 0}, {0, -1}, {1, 1}};
    for (const auto &r : constraints.end_fan) {
        if (r.dim() != 2 || r.is_zero() || !r[0].fits_slong_p() || !r[1].fits_slong_p())
            fail(ErrorCategory::Validation, "end fan direction " + r.to_string() + " is not a nonzero vector in Z^2");
        fan.push_back({r[0].get_si(), r[1].get_si()});
    }
    Dir balance{0, 0};
    for (const auto &r : fan) balance = balance + r;
    if (!is_zero(balance)) fail(ErrorCategory::Validation, "end fan directions do not sum to zero");

    EnumerationResult result;
    const std::size_t n = constraints.points.size();
    if (n == 0) fail(ErrorCategory::Precondition, "enumeration needs at least one constraint point");
    if (n > 24) fail(ErrorCategory::Budget, std::to_string(n) + " constraint points exceed the search budget");
    result.class_degree = (n + 1 + fan.size() - 1) / fan.size();
    const std::size_t needed = result.class_degree * fan.size() - 1;
    if (needed != n) {
        result.warnings.push_back("positive-dimensional family: curves with " + std::to_string(result.class_degree) +
                                  " ends per direction need " + std::to_string(needed) + " points, got " + std::to_string(n));
        return result;
    }

    std::vector<Vec> world, coarse;
    for (const auto &p : constraints.points) {
        world.push_back({Rational(constraints.scale) * p.position[0] + p.offset[0],
                         Rational(constraints.scale) * p.position[1] + p.offset[1]});
        coarse.push_back({p.position[0], p.position[1]});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (world[i] == world[j])
                result.warnings.push_back("points " + std::to_string(i) + " and " + std::to_string(j) +
                                          " coincide: the constraints are not generic");

    Search search(world, fan, constraints.degree_bound, options.budget);
    const auto curves = search.run(static_cast<int>(result.class_degree));
    result.pieces = search.pieces();
    for (const auto &w : search.warnings()) result.warnings.push_back(w);

    std::vector<std::string> fixed;
    for (std::size_t i = 0; i < n; ++i) fixed.push_back("p" + std::to_string(i));
    for (const auto &w : curves) {
        const RawGraph g = Realizer(world).build(w);
        TropicalCurve curve = world_curve(g, constraints);
        Integer max = 0;
        for (const auto &e : curve.internal_edges()) max = std::max(max, e.derivative.max_abs_entry());
        for (const auto &e : curve.ends()) max = std::max(max, e.derivative.max_abs_entry());
        const bool rigid = rigidity_rank(curve, fixed) == 2 * curve.vertices().size();
        if (!rigid) result.warnings.push_back("non-rigid solution found: the constraints are not generic");
        RigidCurveRecord rec{type_encoding(curve, "p0"), std::move(curve), w.multiplicity, rigid, max, std::nullopt, false, false};
        rec.coarse = coarse_curve(Realizer(coarse).build(w), constraints);
        rec.coarse_in_complex = validate(*rec.coarse, complex, BalancingMode::Off).ok();
        if (options.reference)
            rec.matches_reference = are_isomorphic(*rec.coarse, *options.reference, IsomorphismOptions{true, true, false});
        result.total_multiplicity += rec.multiplicity;
        if (rec.matches_reference) result.reference_multiplicity += rec.multiplicity;
        result.records.push_back(std::move(rec));
    }
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const RigidCurveRecord &a, const RigidCurveRecord &b) { return a.encoding < b.encoding; });
    return result;
}

} // namespace tropgw
