#ifndef PADISC_TRIANGLE_HPP
#define PADISC_TRIANGLE_HPP

#include <optional>
#include <string>

#include "padisc/padic.hpp"

namespace padisc {

// A point [p^{n1} u1 : 1 : p^{n2} u2] of the squares-triangle: all three
// homogeneous coordinates are squares after scaling the middle one to 1.
struct TrianglePoint {
    long n1 = 0;
    long n2 = 0;
    Rat u1;   // square units
    Rat u2;
};

// Accept v iff all coordinates are nonzero and both outer-to-middle
// ratios are p-powers times square units.  Throws ZeroVector on v = 0.
std::optional<TrianglePoint> in_triangle(const Vec3& v, long p);

// Exact distance: max{N, M, -N, -M, N-M, M-N} + 1 off the diagonal cell,
// else the measure of the smallest symmetric ball of the three unit
// ratios.
Rat triangle_distance(const TrianglePoint& a, const TrianglePoint& b, long p);

// Definition-level distance over all 9 cross-ratios of the three
// coordinate forms (the dual here is finite, so this is exact).
Rat triangle_oracle(const TrianglePoint& a, const TrianglePoint& b, long p);

// Projection to the hexagonal lattice Z[j].
struct HexPoint {
    long m1 = 0;
    long m2 = 0;
    bool operator==(const HexPoint&) const = default;
};
HexPoint hex_project(const TrianglePoint& pt);

// Hexagonal norm max(|a|, |b|, |a - b|) and the induced distance.
long hex_norm(const HexPoint& h);
long hex_distance(const HexPoint& h1, const HexPoint& h2);

// Text / SVG rendering of the hex-lattice image of a ball in the
// triangle; deterministic output.
std::string hexmap_text(const HexPoint& center, long radius);
std::string hexmap_svg(const HexPoint& center, long radius);

}  // namespace padisc

#endif
