#include "padisc/triangle.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "padisc/errors.hpp"

namespace padisc {

std::optional<TrianglePoint> in_triangle(const Vec3& v, long p) {
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw ZeroVector();
    if (v[0] == 0 || v[1] == 0 || v[2] == 0) return std::nullopt;
    const Rat r1 = v[0] / v[1], r2 = v[2] / v[1];
    const Rat u1 = unit_part(r1, p), u2 = unit_part(r2, p);
    const auto square_unit = [&](const Rat& u) {
        if (p == 2) return mod_pk(u, Int(8)) == 1;
        return legendre(u, p) == 1;
    };
    if (!square_unit(u1) || !square_unit(u2)) return std::nullopt;
    return TrianglePoint{valuation(r1, p), valuation(r2, p), u1, u2};
}

Rat triangle_distance(const TrianglePoint& a, const TrianglePoint& b, long p) {
    const long n = a.n1 - b.n1, m = a.n2 - b.n2;
    if (n != 0 || m != 0)
        return rat(std::max({n, m, -n, -m, n - m, m - n}) + 1);
    const Rat q1 = b.u1 / a.u1, q2 = b.u2 / a.u2;
    return haar_ball_measure(smallest_symmetric_ball({q1, q2, q1 / q2}, p), p);
}

Rat triangle_oracle(const TrianglePoint& a, const TrianglePoint& b, long p) {
    const Rat r0 = pow_rat(rat(p), b.n1 - a.n1) * b.u1 / a.u1;
    const Rat r2 = pow_rat(rat(p), b.n2 - a.n2) * b.u2 / a.u2;
    const std::array<Rat, 3> r = {r0, rat(1), r2};
    std::vector<Rat> ratios;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ratios.push_back(r[i] / r[j]);
    return haar_ball_measure(smallest_symmetric_ball(ratios, p), p);
}

HexPoint hex_project(const TrianglePoint& pt) { return {pt.n1, pt.n2}; }

long hex_norm(const HexPoint& h) {
    return std::max({std::labs(h.m1), std::labs(h.m2), std::labs(h.m1 - h.m2)});
}

long hex_distance(const HexPoint& h1, const HexPoint& h2) {
    return hex_norm({h1.m1 - h2.m1, h1.m2 - h2.m2});
}

std::string hexmap_text(const HexPoint& center, long radius) {
    // A triangle-ball of radius r maps onto the hex ball of radius r - 1
    // (radius <= 1 collapses to the center point).
    const long hex_r = std::max(radius - 1, 0L);
    const long lo1 = center.m1 - hex_r, hi1 = center.m1 + hex_r;
    const long lo2 = center.m2 - hex_r, hi2 = center.m2 + hex_r;
    std::ostringstream out;
    out << "hex ball: center (" << center.m1 << "," << center.m2
        << ") radius " << hex_r << "\n";
    for (long m2 = hi2; m2 >= lo2; --m2) {
        for (long i = 0; i < m2 - lo2; ++i) out << ' ';
        for (long m1 = lo1; m1 <= hi1; ++m1) {
            const bool in = hex_distance(center, {m1, m2}) <= hex_r;
            out << (in ? '*' : '.') << ' ';
        }
        out << "\n";
    }
    return out.str();
}

std::string hexmap_svg(const HexPoint& center, long radius) {
    const long hex_r = std::max(radius - 1, 0L);
    const double scale = 24.0;
    const double size = scale * (2 * hex_r + 2);
    const double mid = size / 2;
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  size, size, size, size);
    out << buf;
    for (long m2 = center.m2 + hex_r; m2 >= center.m2 - hex_r; --m2) {
        for (long m1 = center.m1 - hex_r; m1 <= center.m1 + hex_r; ++m1) {
            const bool in = hex_distance(center, {m1, m2}) <= hex_r;
            const double x =
                mid + scale * (static_cast<double>(m1 - center.m1) -
                               static_cast<double>(m2 - center.m2) / 2.0);
            const double y = mid - scale * 0.866 * static_cast<double>(m2 - center.m2);
            std::snprintf(buf, sizeof(buf),
                          "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" "
                          "fill=\"%s\"/>\n",
                          x, y, scale * 0.38, in ? "#2a6" : "#ddd");
            out << buf;
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace padisc
