#include "padisc/disc.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "padisc/classgroups.hpp"
#include "padisc/errors.hpp"
#include "padisc/sampling.hpp"
#include "padisc/tree.hpp"

namespace padisc {
namespace {

const Vec3 kBase = {rat(2), rat(0), rat(1)};
const Vec3 kFar = {rat(50), rat(0), rat(1)};
const Vec3 kShort = {rat(-18), rat(5), rat(11)};

TEST(Membership, PinnedPoints) {
    EXPECT_TRUE(in_disc(kBase, rat(2), 5));
    EXPECT_TRUE(in_disc(kShort, rat(2), 5));
    EXPECT_FALSE(in_disc({rat(1), rat(0), rat(1)}, rat(2), 5));
    EXPECT_THROW(in_disc({rat(0), rat(0), rat(0)}, rat(2), 5), ZeroVector);
}

TEST(Membership, RepresentativeRescaling) {
    Rng rng(47);
    for (long p : {3, 5, 7}) {
        for (const Rat& alpha : admissible_classes(p)) {
            for (int i = 0; i < 20; ++i) {
                const Vec3 v = rand_disc(rng, alpha, p);
                const Rat lam = rand_nonzero(rng);
                const Vec3 scaled = {lam * v[0], lam * v[1], lam * v[2]};
                const auto r = disc_rep(scaled, alpha, p);
                ASSERT_TRUE(r.has_value());
                EXPECT_TRUE(in_disc(*r, alpha, p));
                EXPECT_TRUE(sphere_eq_proj(*r, scaled));
            }
            // a point of the wrong form class cannot be rescaled in
            const Rat beta = alpha * smallest_nonresidue(p);
            EXPECT_FALSE(
                disc_rep({square_class(beta, p), rat(0), rat(1)}, alpha, p)
                    .has_value());
        }
    }
}

TEST(Lines, PinnedTaxonomy) {
    EXPECT_EQ(classify_line(kBase, kFar, rat(2), 5), LineKind::Long);
    EXPECT_EQ(classify_line(kBase, kShort, rat(2), 5), LineKind::Short);
    EXPECT_THROW(classify_line(kBase, kBase, rat(2), 5), SamePoint);
    const Vec3 scaled = {rat(-2), rat(0), rat(-1)};  // -1 in K at p=5
    EXPECT_THROW(classify_line(kBase, scaled, rat(2), 5), SamePoint);
}

TEST(Lines, PinnedBoundary) {
    const BoundaryPair ends = long_boundary(kBase, kFar, rat(2), 5);
    ASSERT_TRUE(ends.exact);
    bool has1 = false, has2 = false;
    for (const Vec3& e : ends.ends) {
        has1 = has1 || sphere_eq(e, {rat(1), rat(0), rat(0)}, rat(2), 5);
        has2 = has2 || sphere_eq(e, {rat(0), rat(0), rat(1)}, rat(2), 5);
        EXPECT_EQ(Q(e), 0);
        for (const Rat& c : e) {
            if (c != 0) {
                EXPECT_TRUE(in_K(c, rat(2), 5));
                break;
            }
        }
    }
    EXPECT_TRUE(has1);
    EXPECT_TRUE(has2);
}

TEST(Lines, ShortLineHasNoBoundary) {
    EXPECT_THROW(long_boundary(kBase, kShort, rat(2), 5), NotLongLine);
}

TEST(Multiplier, PinnedPairAndInvariant) {
    const MultDistance md = mult_distance(kBase, kFar, rat(2), 5);
    ASSERT_TRUE(md.exact);
    const std::set<Rat> lam(md.lambda.begin(), md.lambda.end());
    EXPECT_EQ(lam, (std::set<Rat>{rat(25), rat(1, 25)}));
    EXPECT_EQ(r_invariant(kBase, kFar), (rat(25) + 2 + rat(1, 25)) / 4);
    // lambda + 1/lambda reconstructs from R on any long pair
    EXPECT_EQ(md.lambda[0] + md.lambda[1], 4 * md.r - 2);
    EXPECT_EQ(md.lambda[0] * md.lambda[1], 1);
}

TEST(Distance, PinnedValues) {
    EXPECT_EQ(hilbert_distance(kBase, kFar, rat(2), 5), 3);
    EXPECT_EQ(hilbert_distance(kBase, kShort, rat(2), 5), rat(1, 4));
    EXPECT_EQ(hilbert_distance(kBase, kBase, rat(2), 5), 0);
    EXPECT_THROW(hilbert_distance({rat(1), rat(0), rat(1)}, kBase, rat(2), 5),
                 NotInDisc);
    EXPECT_THROW(hilbert_distance(kBase, kFar, rat(2), 2), OddPrimeOnly);
}

TEST(Distance, FrozenCorpus) {
    struct Entry {
        long p;
        long alpha;
        const char* v;
        const char* w;
        const char* d;
    };
    // independently computed reference pairs
    const Entry corpus[] = {
        {3, 1, "1/72,1/12,1", "-1/72,-1/30,-2/5", "1/2"},
        {3, 1, "1,-1/2,5/4", "2025/32,-2025/64,2089/128", "5"},
        {3, 1, "-9/128,0,-9/2", "10/63,-5/21,13/35", "3"},
        {3, 1, "-97/81,307/243,-985/729", "-52/9,-226/81,-985/729", "9"},
        {3, 1, "9,0,1", "-324/25,0,-4", "3"},
        {3, 1, "125/36,5/6,1", "-425/18,-5/3,-2", "1/2"},
        {3, 1, "585/16,-6,1", "-261/2,108/5,-18/5", "3"},
        {3, 1, "-61/81,-2/3,-1", "25,12,9", "5"},
        {3, 1, "-36/25,-108/125,-949/625", "-81,-9/2,-17/4", "3"},
        {3, 1, "1/144,-1/12,2", "-225/1792,675/448,-2041/112", "5"},
        {3, 3, "1/3,-1/2,1", "327/4,-3/2,3", "9/2"},
        {3, 3, "73/25,-13/25,28/25", "-866/3,-214/3,-56/3", "5/2"},
        {3, 3, "148/75,4/5,1", "2548/75,4/5,1", "1/2"},
        {3, 3, "-675/14,0,-8/7", "-513/2,108/7,-8/7", "1/6"},
        {3, 3, "-61/105,5/63,-97/945", "-208/105,122/315,-97/945", "13/2"},
        {3, 3, "3,0,1", "-1/24,0,-1/8", "5/2"},
        {3, 6, "-1/75,-1/25,-31/50", "5/2187,-1/81,1/9", "9/2"},
        {3, 6, "216,24,11/3", "1215,135,125/8", "5/2"},
        {3, 6, "-243/25,0,-2/9", "-2169/200,-1/2,-2/9", "13/2"},
        {3, 6, "-29/4,-23/12,-35/36", "-1565/4,-233/12,-35/36", "13/2"},
        {3, 6, "-625/48,-625/24,-649/12", "-1/8,-1/10,-31/75", "5/2"},
        {3, 6, "-103/648,-85/216,-73/72", "-649/750,2/25,-1/5", "5/2"},
        {3, 6, "-8/81,0,-1/3", "-35/24,-3/2,-2", "5/2"},
        {5, 2, "1/900,1/1200,801/1600", "22/225,3/5,9/2", "5"},
    };
    for (const Entry& e : corpus) {
        const Vec3 v = parse_vec3(e.v), w = parse_vec3(e.w);
        EXPECT_EQ(hilbert_distance(v, w, rat(e.alpha), e.p), parse_rat(e.d))
            << "p=" << e.p << " alpha=" << e.alpha << " v=" << e.v
            << " w=" << e.w;
    }
}

TEST(Distance, MetricAxiomsWithUltrametricRefinement) {
    Rng rng(103);
    for (long p : {3, 5}) {
        for (const Rat& alpha : admissible_classes(p)) {
            std::vector<Vec3> pts;
            for (int i = 0; i < 7; ++i) pts.push_back(rand_disc(rng, alpha, p, 1));
            for (int i = 0; i < 60; ++i) {
                const Vec3& a = pts[rng.randrange(7)];
                const Vec3& b = pts[rng.randrange(7)];
                const Vec3& c = pts[rng.randrange(7)];
                const Rat dab = hilbert_distance(a, b, alpha, p);
                const Rat dac = hilbert_distance(a, c, alpha, p);
                const Rat dcb = hilbert_distance(c, b, alpha, p);
                EXPECT_EQ(dab, hilbert_distance(b, a, alpha, p));
                EXPECT_LE(dab, dac + dcb);
                if (dac <= 1 && dcb <= 1) EXPECT_LE(dab, std::max(dac, dcb));
            }
            for (const Vec3& v : pts) {
                EXPECT_EQ(hilbert_distance(v, v, alpha, p), 0);
                const Rat lam = rand_K(rng, alpha, p);
                EXPECT_EQ(hilbert_distance(
                              v, {lam * v[0], lam * v[1], lam * v[2]}, alpha, p),
                          0);
            }
        }
    }
}

TEST(Distance, IsometryInvariance) {
    Rng rng(53);
    for (long p : {3, 5}) {
        const auto adm = admissible_classes(p);
        for (size_t ai = 0; ai < 2; ++ai) {
            const Rat alpha = adm[ai];
            for (int i = 0; i < 25; ++i) {
                const auto pr = gen_pairs(rng, alpha, p, 1)[0];
                const Mat2 g = rand_gl2(rng, 4);
                EXPECT_EQ(hilbert_distance(isom_action(g, pr.first),
                                           isom_action(g, pr.second), alpha, p),
                          hilbert_distance(pr.first, pr.second, alpha, p));
                EXPECT_EQ(r_invariant(isom_action(g, pr.first),
                                      isom_action(g, pr.second)),
                          r_invariant(pr.first, pr.second));
            }
        }
    }
}

// Values are odd half-integers (odd-valuation class), positive integers
// (even-valuation class), or the sub-unit family p^{t+1}/(p-1).
TEST(Distance, ValueSpectrum) {
    Rng rng(59);
    for (long p : {3, 5, 7}) {
        for (const Rat& alpha : admissible_classes(p)) {
            for (const auto& [v, w] : gen_pairs(rng, alpha, p, 10)) {
                const Rat d = hilbert_distance(v, w, alpha, p);
                if (d == 0) continue;
                const bool odd = ((valuation(alpha, p) % 2) + 2) % 2 == 1;
                bool strided;
                if (odd) {
                    const Rat big = d - rat(1, 2);
                    strided = big >= 0 && big.get_den() == 1;
                } else {
                    strided = d >= 1 && d.get_den() == 1;
                }
                if (!strided) {
                    const Rat n = d * (p - 1);
                    EXPECT_EQ(unit_part(n, p), 1);
                    EXPECT_LE(valuation(n, p), 0);
                }
            }
        }
    }
}

TEST(NormalForm, PinnedShear) {
    const NormalForm nf = reduce_to_normal_form(kShort, rat(2), 5);
    EXPECT_EQ(nf.alpha_prime, rat(-223, 121));
    EXPECT_EQ(hilbert_distance(kBase, kShort, rat(2), 5),
              hilbert_distance(isom_action(nf.g, kBase),
                               {nf.alpha_prime, rat(0), rat(1)}, rat(2), 5));
}

TEST(NormalForm, ParabolicOrbitOfBasePoint) {
    const Rat c = rat(3, 2), b = rat(5, 7), alpha = rat(2);
    const Vec3 v = {alpha / (c * c) + b * b, -b * c, c * c};
    const Mat2 g = {{{c, b}, {rat(0), 1 / c}}};
    EXPECT_EQ(Q(v), alpha);
    EXPECT_EQ(isom_action(g, v), (Vec3{alpha, rat(0), rat(1)}));
    EXPECT_EQ(isom_action(mat2_inv(g), {alpha, rat(0), rat(1)}), v);
    const Vec3 v2 = {alpha / (c * c) + b * b / (c * c), b, c * c};
    const Mat2 g2 = {{{c, -b / c}, {rat(0), 1 / c}}};
    EXPECT_EQ(Q(v2), alpha);
    EXPECT_EQ(isom_action(g2, v2), (Vec3{alpha, rat(0), rat(1)}));
}

TEST(Orthogonality, PinnedDirections) {
    EXPECT_TRUE(orthogonal_lines(kBase, {rat(0), rat(1), rat(0)},
                                 {rat(2), rat(0), rat(-1)}, rat(2), 5));
}

TEST(UltrametricLocus, MatchesUnitDistanceThreshold) {
    EXPECT_TRUE(same_ultrametric_locus(kBase, kShort, rat(2), 5));
    EXPECT_FALSE(same_ultrametric_locus(kBase, kFar, rat(2), 5));
}

TEST(Orbits, LabelsInvariantWithExpectedCount) {
    Rng rng(127);
    for (long p : {3, 5, 7}) {
        for (const Rat& alpha : admissible_classes(p)) {
            std::set<int> labels;
            std::vector<Vec3> pts;
            for (int i = 0; i < 40; ++i) pts.push_back(rand_disc(rng, alpha, p));
            const Rat p2 = rat(p * p);
            pts.push_back({alpha, rat(0), rat(1)});
            pts.push_back({alpha * p2, rat(0), rat(1)});
            pts.push_back({alpha * p2 * p2, rat(0), rat(1)});
            for (const Vec3& v : pts) {
                const int lab = orbit_label(v, alpha, p);
                labels.insert(lab);
                const Rat lam = rand_K(rng, alpha, p);
                const Mat2 g = rand_isom_word(rng, p, 2);
                const Mat2 gsq = mat2_mul(g, g);  // determinant is a square
                const Vec3 img =
                    isom_action(gsq, {lam * v[0], lam * v[1], lam * v[2]});
                EXPECT_EQ(orbit_label(img, alpha, p), lab);
            }
            const size_t expect = minus_one_in_K(alpha, p) ? 2u : 1u;
            EXPECT_EQ(labels.size(), expect) << "p=" << p << " alpha=" << alpha;
        }
    }
}

TEST(Orbits, ConnectWitnessReachesBaseRay) {
    Rng rng(61);
    const std::array<std::pair<long, long>, 4> combos = {
        {{5, 2}, {7, 1}, {3, 1}, {13, 13}}};
    for (const auto& [p, al] : combos) {
        const Rat alpha = rat(al);
        for (int i = 0; i < 5; ++i) {
            const Vec3 v = rand_disc(rng, alpha, p);
            const auto out = orbit_connect(v, alpha, p);
            const Vec3 base = {alpha, rat(0), rat(1)};
            if (orbit_label(v, alpha, p) != orbit_label(base, alpha, p)) {
                EXPECT_FALSE(out.has_value());
                continue;
            }
            ASSERT_TRUE(out.has_value());
            Vec3 scaled;
            for (int j = 0; j < 3; ++j) scaled[j] = v[j] / v[2];
            const Vec3 img = isom_action(out->g, scaled);
            Vec3 tgt;
            for (int j = 0; j < 3; ++j) tgt[j] = (out->kappa / v[2]) * base[j];
            for (int j = 0; j < 3; ++j) {
                if (out->exact) {
                    EXPECT_EQ(img[j], tgt[j]);
                } else if (img[j] != tgt[j]) {
                    EXPECT_GE(valuation(img[j] - tgt[j], p), 8);
                }
            }
            EXPECT_TRUE(in_K(out->kappa, alpha, p));
        }
    }
}

Mat2 rand_sl2(Rng& rng) {
    Mat2 g = mat2_id();
    for (int i = 0; i < 3; ++i) {
        const long k = rng.randrange(3);
        Mat2 h;
        if (k == 0)
            h = {{{rat(1), rand_rat(rng, 5)}, {rat(0), rat(1)}}};
        else if (k == 1)
            h = {{{rat(1), rat(0)}, {rand_rat(rng, 5), rat(1)}}};
        else {
            const Rat u = rand_nonzero(rng, 5);
            h = {{{u, rat(0)}, {rat(0), 1 / u}}};
        }
        g = mat2_mul(g, h);
    }
    return g;
}

TEST(Sheets, LabelsAndConnections) {
    Rng rng(131);
    for (long p : {3, 5, 7}) {
        for (const Rat& beta : all_square_classes(p)) {
            const Vec3 v0 = {beta, rat(0), rat(1)};
            const int nsheets = hyperboloid_sheets(beta, p);
            std::set<int> labels = {sheet_label(v0, beta, p)};
            std::vector<Vec3> pts = {v0};
            for (int i = 0; i < 25; ++i) {
                const Mat2 g = rand_sl2(rng);
                const Vec3 w = isom_action(g, v0);
                EXPECT_EQ(Q(w), beta);
                if (w[2] != 0) {
                    EXPECT_EQ(sheet_label(w, beta, p), sheet_label(v0, beta, p));
                    pts.push_back(w);
                }
            }
            Rat kappa = rat(1);
            if (nsheets == 2) {
                for (const Rat& c : all_square_classes(p)) {
                    if (!in_K(c, beta, p)) {
                        kappa = c;
                        break;
                    }
                }
            }
            const Vec3 wflip = {(beta + 1) / kappa, rat(1), kappa};
            EXPECT_EQ(Q(wflip), beta);
            labels.insert(sheet_label(wflip, beta, p));
            EXPECT_EQ(labels.size(), static_cast<size_t>(nsheets))
                << "p=" << p << " beta=" << beta;
            const auto verify_connect = [&](const Vec3& w) {
                const SheetConnection sc = sheet_connect(v0, w, beta, p);
                const Vec3 img = isom_action(sc.g, v0);
                for (int j = 0; j < 3; ++j) {
                    if (sc.exact) {
                        EXPECT_EQ(img[j], w[j]);
                    } else if (img[j] != w[j]) {
                        EXPECT_GE(valuation(img[j] - w[j], p), 8);
                    }
                }
            };
            for (size_t i = 1; i < std::min<size_t>(3, pts.size()); ++i)
                verify_connect(pts[i]);
            if (nsheets == 1) verify_connect(wflip);
        }
    }
}

TEST(Stabilizer, FamilyFixesBaseRayOverUnitLattice) {
    Rng rng(137);
    for (long p : {3, 5, 7}) {
        for (const Rat& alpha : admissible_classes(p)) {
            const Mat2 sa = base_sym(alpha);
            const Vec3 base = {alpha, rat(0), rat(1)};
            for (int i = 0; i < 30; ++i) {
                const Rat t = rand_rat(rng, 9);
                if (1 + alpha * t * t == 0) continue;
                const Mat2 g = stab_family(alpha, t, rng.coin());
                const Mat2 out = sandwich(g, sa);
                const Rat mu = out[1][1];
                Mat2 scaled = sa;
                for (auto& row : scaled)
                    for (auto& e : row) e *= mu;
                EXPECT_EQ(out, scaled);
                EXPECT_TRUE(in_K(mu, alpha, p));
                EXPECT_TRUE(sphere_eq(isom_action(g, base), base, alpha, p));
                long lo = VAL_INF;
                for (const auto& row : g)
                    for (const auto& e : row) lo = std::min(lo, valuation(e, p));
                Mat2 gn = g;
                for (auto& row : gn)
                    for (auto& e : row) e *= pow_rat(rat(p), -lo);
                for (const auto& row : gn)
                    for (const auto& e : row) EXPECT_GE(valuation(e, p), 0);
                EXPECT_EQ(valuation(det2(gn), p), 0);
                if (((valuation(alpha, p) % 2) + 2) % 2 == 0)
                    EXPECT_EQ(lat_push(gn, {0, 0, 0}, p), (TreeVertex{0, 0, 0}));
            }
            if (minus_one_in_K(alpha, p)) {
                const StabMinusOne sm = stab_minus_one(alpha, p);
                if (sm.exact) {
                    const Mat2 out = sandwich(sm.g, sa);
                    const Rat mu = out[1][1];
                    Mat2 scaled = sa;
                    for (auto& row : scaled)
                        for (auto& e : row) e *= mu;
                    EXPECT_EQ(out, scaled);
                    EXPECT_TRUE(in_K(mu, alpha, p));
                }
            }
        }
    }
}

// With a^2 + alpha c^2 generic, [[a, alpha e c], [c, alpha a]] moves the
// base ray (nonzero off-diagonal after conjugation), while the variant
// [[a, -alpha e c], [c, e a]] fixes it projectively.
TEST(Stabilizer, ShapeOfTheWorkingFamily) {
    const Rat alpha = rat(2), a = rat(3), c = rat(1), eps = rat(-1);
    const Mat2 bad = {{{a, alpha * eps * c}, {c, alpha * a}}};
    EXPECT_NE(sandwich(bad, base_sym(alpha))[0][1], 0);
    const Mat2 good = {{{a, -alpha * eps * c}, {c, eps * a}}};
    const Mat2 outg = sandwich(good, base_sym(alpha));
    const Rat mu = outg[1][1];
    Mat2 scaled = base_sym(alpha);
    for (auto& row : scaled)
        for (auto& e : row) e *= mu;
    EXPECT_EQ(outg, scaled);
}

TEST(DualShape, PinnedKinds) {
    EXPECT_EQ(dual_description(rat(2), 5), DualKind::ConeOnly);
    EXPECT_EQ(dual_description(rat(1), 7), DualKind::ConeAndDisc);
    EXPECT_EQ(dual_description(rat(7), 7), DualKind::ConeOnly);
    EXPECT_EQ(dual_description(rat(1), 3), DualKind::ConeAndDisc);
}

}  // namespace
}  // namespace padisc
