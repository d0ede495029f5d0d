#include "bc/convex.hpp"

#include <algorithm>

namespace bc {

ClosureSystem::ClosureSystem(int n, std::vector<Mask> closed) : n_(n), closed_(std::move(closed)) {
    require_cap(n, kClosureCap, "closure system");
    const std::size_t total = std::size_t{1} << n;
    const Mask all = full_mask(n);
    is_closed_.assign(total, 0);
    for (Mask c : closed_) {
        if (!is_subset(c, all)) throw SchemaError("closed set outside the ground set");
        is_closed_[c] = 1;
    }
    if (!is_closed_[all]) throw PreconditionViolation("ground set is not closed");
    std::sort(closed_.begin(), closed_.end());
    closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());

    hull_.assign(total, 0);
    for (std::size_t a = total; a-- > 0;) {
        const Mask m = static_cast<Mask>(a);
        if (is_closed_[m]) {
            hull_[m] = m;
            continue;
        }
        Mask h = all;
        for (int e = 0; e < n; ++e)
            if (!contains(m, e)) h &= hull_[m | bit(e)];
        hull_[m] = h;
    }
    // Intersection-closed iff every computed hull is itself closed.
    for (std::size_t a = 0; a < total; ++a) {
        if (!is_closed_[hull_[a]]) {
            throw PreconditionViolation("closed sets are not closed under intersection (hull of mask " +
                                        std::to_string(a) + " is not closed)");
        }
    }
}

Mask extreme_points(const ClosureSystem& cs, Mask a) {
    Mask ex = 0;
    for (int e : elements_of(a))
        if (!contains(cs.hull(a & ~bit(e)), e)) ex |= bit(e);
    return ex;
}

std::optional<BasisFailure> find_basis_failure(const ClosureSystem& cs) {
    for (Mask a : cs.closed_sets()) {
        Mask ex = extreme_points(cs, a);
        if (cs.hull(ex) != a) return BasisFailure{a, ex};
    }
    return std::nullopt;
}

ConvexGeometry::ConvexGeometry(ClosureSystem cs) : cs_(std::move(cs)) {
    if (auto f = find_basis_failure(cs_)) {
        throw PreconditionViolation("not a convex geometry: closed set mask " + std::to_string(f->closed_set) +
                                    " is not generated by its extreme points");
    }
    const std::size_t total = std::size_t{1} << cs_.size();
    free_.assign(total, 0);
    for (std::size_t a = 0; a < total; ++a) {
        const Mask m = static_cast<Mask>(a);
        bool ok = cs_.is_closed(m);
        for (int e : elements_of(m)) {
            if (!ok) break;
            ok = free_[m & ~bit(e)] != 0;
        }
        free_[a] = ok ? 1 : 0;
    }
}

Mask ConvexGeometry::basis(Mask closed_set) const {
    if (!cs_.is_closed(closed_set)) throw PreconditionViolation("basis requested for a set that is not closed");
    Mask b = extreme_points(cs_, closed_set);
    if (cs_.hull(b) != closed_set) throw PreconditionViolation("basis verification failed");
    return b;
}

std::vector<Mask> ConvexGeometry::free_sets() const {
    std::vector<Mask> out;
    for (std::size_t a = 0; a < free_.size(); ++a)
        if (free_[a]) out.push_back(static_cast<Mask>(a));
    return out;
}

BigInt count_free_signed(const ConvexGeometry& cg) {
    long total = 0;
    const std::size_t all = std::size_t{1} << cg.size();
    for (std::size_t a = 0; a < all; ++a) {
        const Mask m = static_cast<Mask>(a);
        total += ((popcount(cg.hull(m)) - popcount(m)) % 2 == 0) ? 1 : -1;
    }
    return BigInt(total);
}

BigInt euler_characteristic_free(const ConvexGeometry& cg) {
    if (cg.size() == 0) throw PreconditionViolation("Euler characteristic needs a non-empty ground set");
    long total = 0;
    for (Mask a : cg.free_sets())
        if (a != 0) total += (popcount(a) % 2 == 1) ? 1 : -1;
    return BigInt(total);
}

Mask hstar(Mask a, const std::vector<BrokenCircuit>& broken) {
    while (true) {
        Mask next = a;
        for (const auto& b : broken)
            if (is_subset(b.broken, a)) next |= bit(max_element(b.witness));
        if (next == a) return a;
        a = next;
    }
}

HStarResult hstar_from_circuits(int n, const std::vector<Mask>& circuits) {
    require_cap(n, kClosureCap, "hstar_from_circuits");
    auto broken = derive_broken_circuits(circuits, n);
    for (const auto& b : broken)
        if (b.broken == 0) throw PreconditionViolation("singleton circuit: witness c(B) for B = ∅ cannot be used");
    std::vector<Mask> closed;
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t a = 0; a < total; ++a) {
        const Mask m = static_cast<Mask>(a);
        if (hstar(m, broken) == m) closed.push_back(m);
    }
    HStarResult r{ClosureSystem(n, std::move(closed)), std::move(broken), false, false};
    r.convex = !find_basis_failure(r.closure).has_value();
    if (r.convex) {
        ConvexGeometry cg(r.closure);
        PruneIndex index(n, broken_sets(r.broken));
        std::vector<Mask> avoiding;
        serial::for_each_avoiding(index, [&](Mask a) { avoiding.push_back(a); });
        std::sort(avoiding.begin(), avoiding.end());
        r.free_matches_avoiding = (avoiding == cg.free_sets());
    }
    return r;
}

ClosureSystem interval_geometry(int n) {
    std::vector<Mask> closed{0};
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) closed.push_back(full_mask(j + 1) & ~full_mask(i));
    return ClosureSystem(n, std::move(closed));
}

ClosureSystem discrete_geometry(int n) {
    std::vector<Mask> closed;
    for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) closed.push_back(static_cast<Mask>(a));
    return ClosureSystem(n, std::move(closed));
}

ClosureSystem order_ideal_geometry(const FinitePoset& p) {
    const int n = p.size();
    std::vector<Mask> closed;
    for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
        const Mask m = static_cast<Mask>(a);
        bool ideal = true;
        for (int x : elements_of(m)) {
            for (int y = 0; y < n && ideal; ++y)
                if (p.less(y, x) && !contains(m, y)) ideal = false;
            if (!ideal) break;
        }
        if (ideal) closed.push_back(m);
    }
    return ClosureSystem(n, std::move(closed));
}

namespace {

using Point = std::pair<long, long>;

long cross(const Point& o, const Point& a, const Point& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return cross(a, b, p) == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

bool in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    long d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
    bool neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(neg && pos);
}

// Carathéodory in the plane: p ∈ conv(A) iff p lies in a point, segment or
// triangle spanned by members of A.
bool in_hull(const Point& p, const std::vector<Point>& pts, Mask a) {
    auto idx = elements_of(a);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (pts[idx[i]] == p) return true;
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (on_segment(p, pts[idx[i]], pts[idx[j]])) return true;
            for (std::size_t k = j + 1; k < idx.size(); ++k)
                if (cross(pts[idx[i]], pts[idx[j]], pts[idx[k]]) != 0 &&
                    in_triangle(p, pts[idx[i]], pts[idx[j]], pts[idx[k]]))
                    return true;
        }
    }
    return false;
}

}  // namespace

ClosureSystem planar_point_geometry(const std::vector<std::pair<long, long>>& points) {
    const int n = static_cast<int>(points.size());
    require_cap(n, kClosureCap, "planar point geometry");
    std::vector<char> closed_flag(std::size_t{1} << n, 0);
    for (std::size_t a = 0; a < closed_flag.size(); ++a) {
        Mask h = 0;
        for (int i = 0; i < n; ++i)
            if (in_hull(points[i], points, static_cast<Mask>(a))) h |= bit(i);
        closed_flag[h] = 1;
    }
    std::vector<Mask> closed;
    for (std::size_t a = 0; a < closed_flag.size(); ++a)
        if (closed_flag[a]) closed.push_back(static_cast<Mask>(a));
    return ClosureSystem(n, std::move(closed));
}

ClosureSystem random_point_geometry(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coord(0, 12);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        Point p{coord(rng), coord(rng)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return planar_point_geometry(pts);
}

FinitePoset random_poset(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) less.emplace_back(i, j);
    return FinitePoset::from_less_pairs(n, less);
}

}  // namespace bc
