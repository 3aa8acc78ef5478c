#include "padisc/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "padisc/errors.hpp"

namespace padisc {

TreeVertex lat_canon(const Mat2& m, long p) {
    Rat a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    if (a * d - b * c == 0) throw SingularBasis();
    if (valuation(c, p) < valuation(d, p)) {
        std::swap(a, b);
        std::swap(c, d);
    }
    if (c != 0) {
        const Rat f = c / d;
        a = a - f * b;
        c = rat(0);
    }
    long va = valuation(a, p), vd = valuation(d, p);
    b = b * pow_rat(rat(p), vd) / d;  // scale column 2 by the unit p^D/d
    const long shift = -std::min({va, vd, valuation(b, p)});
    va += shift;
    vd += shift;
    b = b * pow_rat(rat(p), shift);
    Int bi = 0;
    if (b != 0 && va > 0) bi = mod_pk(b, pow_int(p, va));
    return {va, bi, vd};
}

Mat2 canon_mat(const TreeVertex& t, long p) {
    return {{{Rat(pow_int(p, t.a)), Rat(t.b)},
             {rat(0), Rat(pow_int(p, t.d))}}};
}

long tree_distance(const TreeVertex& u, const TreeVertex& w, long p) {
    const Mat2 m = mat2_mul(mat2_inv(canon_mat(u, p)), canon_mat(w, p));
    long lo = VAL_INF;
    for (const auto& row : m)
        for (const auto& e : row) lo = std::min(lo, valuation(e, p));
    const long dv = valuation(det2(m), p);
    return std::abs(dv - 2 * lo);
}

std::vector<TreeVertex> neighbors(const TreeVertex& u, long p) {
    const Mat2 b = canon_mat(u, p);
    std::vector<TreeVertex> out;
    for (long j = 0; j < p; ++j) {
        const Mat2 s = {{{rat(p), rat(j)}, {rat(0), rat(1)}}};
        out.push_back(lat_canon(mat2_mul(b, s), p));
    }
    const Mat2 s = {{{rat(1), rat(0)}, {rat(0), rat(p)}}};
    out.push_back(lat_canon(mat2_mul(b, s), p));
    return out;
}

TreeVertex project(const Vec3& v, const Rat& alpha, long p) {
    if (p == 2) throw OddPrimeOnly();
    if (((valuation(alpha, p) % 2) + 2) % 2 != 0) throw OddValuationAlpha();
    if (!in_disc(v, alpha, p)) throw NotInDisc();
    const Rat z = v[2];
    const long vs =
        (valuation(Q(v), p) - valuation(alpha, p) - 2 * valuation(z, p)) / 2;
    const Mat2 m = {{{pow_rat(rat(p), vs), v[1] / z}, {rat(0), rat(1)}}};
    return lat_canon(m, p);
}

TreeVertex lat_push(const Mat2& g, const TreeVertex& t, long p) {
    return lat_canon(mat2_mul(g, canon_mat(t, p)), p);
}

BoundaryPoint boundary_point(const Vec3& w, long p) {
    Rat a, b;
    if (w[0] != 0) {
        a = w[0];
        b = w[1];
    } else {
        a = w[1];
        b = w[2];
    }
    if (a == 0 && b == 0) throw ZeroVector();
    if (b == 0 || (a != 0 && valuation(a, p) <= valuation(b, p)))
        return {rat(1), b / a};
    return {a / b, rat(1)};
}

std::pair<BoundaryPoint, BoundaryPoint> boundary_of_long_line(
    const Vec3& v, const Vec3& w, const Rat& alpha, long p, long N) {
    const BoundaryPair bp = long_boundary(v, w, alpha, p, N);
    return {boundary_point(bp.ends[0], p), boundary_point(bp.ends[1], p)};
}

BoundaryPoint mobius(const Mat2& g, const BoundaryPoint& bp, long p) {
    const Rat u0 = g[0][0] * bp.a + g[0][1] * bp.b;
    const Rat u1 = g[1][0] * bp.a + g[1][1] * bp.b;
    if (u0 != 0) return boundary_point({u0, u1, rat(0)}, p);
    return boundary_point({rat(0), u0, u1}, p);
}

std::vector<TreeVertex> geodesic_vertices(const BoundaryPoint& e1,
                                          const BoundaryPoint& e2, long k_lo,
                                          long k_hi, long p) {
    if (e1 == e2) throw EqualBoundaryPoints();
    std::vector<TreeVertex> out;
    for (long k = k_lo; k <= k_hi; ++k) {
        const Rat pk = pow_rat(rat(p), k);
        const Mat2 m = {{{pk * e1.a, e2.a}, {pk * e1.b, e2.b}}};
        out.push_back(lat_canon(m, p));
    }
    return out;
}

std::string vertex_label(const TreeVertex& t, long p) {
    std::ostringstream out;
    out << "[[" << pow_int(p, t.a).get_str() << "," << t.b.get_str() << "],[0,"
        << pow_int(p, t.d).get_str() << "]]";
    return out.str();
}

std::string export_dot(const TreeVertex& center, long radius, long p) {
    // Breadth-first enumeration; discovery order makes the output
    // deterministic.
    std::vector<TreeVertex> order = {center};
    std::map<TreeVertex, long> depth = {{center, 0}};
    std::vector<std::pair<TreeVertex, TreeVertex>> edges;
    for (size_t i = 0; i < order.size(); ++i) {
        const TreeVertex u = order[i];
        if (depth[u] == radius) continue;
        for (const TreeVertex& w : neighbors(u, p)) {
            if (!depth.count(w)) {
                depth[w] = depth[u] + 1;
                order.push_back(w);
                edges.push_back({u, w});
            }
        }
    }
    std::ostringstream out;
    out << "graph tree {\n  node [shape=box];\n";
    for (const TreeVertex& u : order)
        out << "  \"" << vertex_label(u, p) << "\";\n";
    for (const auto& [u, w] : edges)
        out << "  \"" << vertex_label(u, p) << "\" -- \"" << vertex_label(w, p)
            << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace padisc
