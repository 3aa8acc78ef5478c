#include "padisc/triangle.hpp"

#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "padisc/errors.hpp"
#include "padisc/sampling.hpp"

namespace padisc {
namespace {

TrianglePoint tri(const Vec3& v, long p) {
    const auto pt = in_triangle(v, p);
    EXPECT_TRUE(pt.has_value());
    return *pt;
}

TEST(Membership, AcceptedAndRejectedPoints) {
    const auto p0 = in_triangle({rat(1), rat(1), rat(1)}, 5);
    ASSERT_TRUE(p0.has_value());
    EXPECT_EQ(p0->n1, 0);
    EXPECT_EQ(p0->n2, 0);
    const auto p1 = in_triangle({rat(25), rat(1), rat(5)}, 5);
    ASSERT_TRUE(p1.has_value());
    EXPECT_EQ(p1->n1, 2);
    EXPECT_EQ(p1->n2, 1);
    EXPECT_FALSE(in_triangle({rat(2), rat(1), rat(1)}, 5).has_value());
    EXPECT_FALSE(in_triangle({rat(0), rat(1), rat(1)}, 5).has_value());
    EXPECT_THROW(in_triangle({rat(0), rat(0), rat(0)}, 5), ZeroVector);
}

TEST(Distances, PinnedValues) {
    const long p = 5;
    const TrianglePoint p0 = tri({rat(1), rat(1), rat(1)}, p);
    EXPECT_EQ(triangle_distance(p0, tri({rat(25), rat(1), rat(5)}, p), p), 3);
    EXPECT_EQ(triangle_distance(p0, tri({rat(5), rat(1), rat(1)}, p), p), 2);
    EXPECT_EQ(triangle_distance(p0, tri({rat(4), rat(1), rat(4)}, p), p), 1);
    EXPECT_EQ(triangle_distance(p0, p0, p), 0);
    const Rat u1 = rat(6);   // 1 + 5
    EXPECT_EQ(triangle_distance(p0, tri({u1 * u1, rat(1), rat(1)}, p), p),
              rat(1, 4));
    const Rat u2 = rat(26);  // 1 + 25: deeper principal-unit ball
    EXPECT_EQ(triangle_distance(p0, tri({u2 * u2, rat(1), rat(1)}, p), p),
              rat(1, 20));
}

TEST(Distances, FormulaMatchesExactOracleWithHexLaw) {
    Rng rng(113);
    for (long p : {3, 5, 7}) {
        for (int i = 0; i < 120; ++i) {
            const TrianglePoint a = rand_triangle(rng, p);
            const TrianglePoint b = rand_triangle(rng, p);
            const Rat d = triangle_distance(a, b, p);
            EXPECT_EQ(d, triangle_oracle(a, b, p)) << "p=" << p;
            EXPECT_EQ(d, triangle_distance(b, a, p));
            if (d > 1) {
                EXPECT_EQ(hex_distance(hex_project(a), hex_project(b)), d - 1);
            } else {
                const TrianglePoint c = rand_triangle(rng, p);
                const Rat dac = triangle_distance(a, c, p);
                const Rat dcb = triangle_distance(c, b, p);
                if (dac <= 1 && dcb <= 1) EXPECT_LE(d, std::max(dac, dcb));
            }
        }
    }
}

TEST(HexImage, RadiusTwoBallIsTheSevenPointHexBall) {
    const TrianglePoint p0 = tri({rat(1), rat(1), rat(1)}, 5);
    std::set<std::pair<long, long>> ball;
    for (long n1 = -3; n1 <= 3; ++n1)
        for (long n2 = -3; n2 <= 3; ++n2) {
            const TrianglePoint pt =
                tri({pow_rat(rat(5), n1), rat(1), pow_rat(rat(5), n2)}, 5);
            if (triangle_distance(p0, pt, 5) <= 2) ball.insert({n1, n2});
        }
    std::set<std::pair<long, long>> expect;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            if (hex_norm({a, b}) <= 1) expect.insert({a, b});
    EXPECT_EQ(ball, expect);
    EXPECT_EQ(ball.size(), 7u);
}

TEST(HexImage, NormAndDistancePins) {
    EXPECT_EQ(hex_norm({0, 0}), 0);
    EXPECT_EQ(hex_norm({1, -1}), 2);
    EXPECT_EQ(hex_norm({2, 1}), 2);
    EXPECT_EQ(hex_distance({2, 1}, {0, 0}), 2);
    EXPECT_EQ(hex_distance({1, 1}, {0, 0}), 1);
}

TEST(Rendering, TextMapDeterministicWithSevenStars) {
    const std::string txt = hexmap_text({0, 0}, 2);
    EXPECT_EQ(txt, hexmap_text({0, 0}, 2));
    long stars = 0, dots = 0;
    for (char c : txt) {
        stars += c == '*';
        dots += c == '.';
    }
    EXPECT_EQ(stars, 7);
    EXPECT_EQ(dots, 2);
    const std::string svg = hexmap_svg({0, 0}, 2);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace padisc
