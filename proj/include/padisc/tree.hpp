#ifndef PADISC_TREE_HPP
#define PADISC_TREE_HPP

#include <compare>
#include <string>
#include <vector>

#include "padisc/disc.hpp"

namespace padisc {

// Canonical homothety representative of a rank-2 lattice: column basis
// [[p^A, b], [0, p^D]] with min(A, D, v(b)) = 0 and b an integer in
// [0, p^A).  Unique per class, so equality is structural.
struct TreeVertex {
    long a = 0;
    Int b = 0;
    long d = 0;
    bool operator==(const TreeVertex&) const = default;
    std::strong_ordering operator<=>(const TreeVertex& o) const {
        if (a != o.a) return a <=> o.a;
        if (const int c = cmp(b, o.b); c != 0)
            return c < 0 ? std::strong_ordering::less
                         : std::strong_ordering::greater;
        return d <=> o.d;
    }
};

// Canonicalize an arbitrary column basis; throws SingularBasis.
TreeVertex lat_canon(const Mat2& m, long p);

// The canonical basis matrix of a vertex.
Mat2 canon_mat(const TreeVertex& t, long p);

// |e1 - e2| for the elementary divisors p^{e1}, p^{e2} of B(u)^{-1} B(w).
long tree_distance(const TreeVertex& u, const TreeVertex& w, long p);

// The p + 1 index-p sublattice classes.
std::vector<TreeVertex> neighbors(const TreeVertex& u, long p);

// Covariant projection of a disc point to the tree (odd p, even-valuation
// alpha only; throws OddValuationAlpha / NotInDisc otherwise).
TreeVertex project(const Vec3& v, const Rat& alpha, long p);

// Pushforward of a vertex by g (lattice image, canonicalized).
TreeVertex lat_push(const Mat2& g, const TreeVertex& t, long p);

// Normalized homogeneous pair [a : b] with unit leading coordinate.
struct BoundaryPoint {
    Rat a;
    Rat b;
    bool operator==(const BoundaryPoint&) const = default;
};

// Boundary point of a cone representative (a^2, ab, b^2) -> [a : b].
BoundaryPoint boundary_point(const Vec3& w, long p);

// Boundary points of a long line through v, w (cone endpoints mapped
// through boundary_point).  Throws NotLongLine.
std::pair<BoundaryPoint, BoundaryPoint> boundary_of_long_line(
    const Vec3& v, const Vec3& w, const Rat& alpha, long p, long N = 24);

// Moebius action of g on the boundary.
BoundaryPoint mobius(const Mat2& g, const BoundaryPoint& bp, long p);

// Vertices p^k e1 Z_p + e2 Z_p for k in [k_lo, k_hi]; consecutive entries
// at distance 1.  Throws EqualBoundaryPoints.
std::vector<TreeVertex> geodesic_vertices(const BoundaryPoint& e1,
                                          const BoundaryPoint& e2, long k_lo,
                                          long k_hi, long p);

// Deterministic label "[[p^A, b], [0, p^D]]" with numerals expanded.
std::string vertex_label(const TreeVertex& t, long p);

// DOT rendering of the ball of the given radius around a center vertex.
std::string export_dot(const TreeVertex& center, long radius, long p);

}  // namespace padisc

#endif
