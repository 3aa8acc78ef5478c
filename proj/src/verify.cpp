#include "padisc/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "padisc/errors.hpp"
#include "padisc/oracle.hpp"
#include "padisc/sampling.hpp"
#include "padisc/tree.hpp"
#include "padisc/triangle.hpp"

namespace padisc {

namespace {

struct Collector {
    std::vector<CheckResult>* out;
    void check(const std::string& name, bool pass,
               const std::string& detail = "") {
        out->push_back({name, pass, pass ? "" : detail});
    }
};

std::string pair_str(long p, const Rat& alpha, const Vec3& v, const Vec3& w) {
    std::ostringstream s;
    s << "p=" << p << " alpha=" << to_string(alpha) << " v=(" << to_string(v)
      << ") w=(" << to_string(w) << ")";
    return s.str();
}

void padic_suite(Collector& c, std::uint64_t seed) {
    c.check("pinned valuations and square classes",
            valuation(rat(24, 25), 5) == -2 && valuation(rat(0), 3) == VAL_INF &&
                valuation(rat(250), 5) == 3 && square_class(rat(7), 5) == 2 &&
                square_class(rat(9), 5) == 1 &&
                square_class(rat(-2), 2) == -2 && smallest_nonresidue(5) == 2 &&
                smallest_nonresidue(7) == 3 && smallest_nonresidue(3) == 2);
    c.check("pinned Hensel square roots",
            padic_sqrt(rat(6), 5, 3).value == 16 &&
                padic_sqrt(rat(9), 7).value == 3 && padic_sqrt(rat(9), 7).exact &&
                padic_sqrt(rat(17), 2, 5).value == 9);
    {
        Rng rng(seed + 7);
        bool ok = true;
        for (int i = 0; i < 60 && ok; ++i) {
            const long p = std::array<long, 5>{2, 3, 5, 7, 11}[rng.randrange(5)];
            const Rat base = rand_nonzero(rng);
            const Rat x = base * base * pow_rat(rat(p), 2 * rng.randint(-1, 1));
            const long n = rng.randint(4, 10);
            const PadicApprox r = padic_sqrt(x, p, n);
            ok = r.exact ||
                 valuation(r.value * r.value - x, p) >= valuation(x, p) + n;
        }
        c.check("Hensel root precision on random squares", ok);
    }
    c.check("pinned Hilbert symbols",
            hilbert_symbol(rat(2), rat(5), 5) == -1 &&
                hilbert_symbol(rat(1), rat(2), 5) == 1 &&
                hilbert_symbol(rat(1), rat(-1), 5) == 1 &&
                hilbert_symbol(rat(-2), rat(-1), 5) == 1);
    {
        Rng rng(seed + 11);
        bool ok = true;
        std::string detail;
        for (long p : {3, 5, 2}) {
            for (int i = 0; i < 40 && ok; ++i) {
                const Rat a = rand_nonzero(rng, 6) *
                              pow_rat(rat(p), rng.randint(0, 1));
                const Rat b = rand_nonzero(rng, 6) *
                              pow_rat(rat(p), rng.randint(0, 1));
                const int s = hilbert_symbol(a, b, p);
                const Rat cc = rand_nonzero(rng, 6);
                const Rat b2 = rand_nonzero(rng, 6) *
                               pow_rat(rat(p), rng.randint(0, 1));
                ok = s == hilbert_symbol(b, a, p) &&
                     hilbert_symbol(a, -a, p) == 1 &&
                     hilbert_symbol(a * cc * cc, b, p) == s &&
                     hilbert_symbol(a, b * b2, p) ==
                         s * hilbert_symbol(a, b2, p);
                if (!ok)
                    detail = "p=" + std::to_string(p) + " a=" + to_string(a) +
                             " b=" + to_string(b);
            }
        }
        c.check("Hilbert symbol is symmetric, bimultiplicative, (a,-a)=1", ok,
                detail);
    }
    c.check("pinned ball measures",
            haar_ball_measure(0, 5) == 1 && haar_ball_measure(2, 3) == 3 &&
                haar_ball_measure(-1, 5) == rat(1, 4));
    c.check("pinned symmetric-ball radii",
            smallest_symmetric_ball({rat(25), rat(1, 25)}, 5) == 2 &&
                smallest_symmetric_ball({rat(1)}, 5) == VAL_NEG_INF &&
                smallest_symmetric_ball({rat(126)}, 5) == -3);
    {
        Rng rng(seed + 13);
        bool ok = true;
        for (int i = 0; i < 60 && ok; ++i) {
            const Rat x = rand_nonzero(rng) * pow_rat(rat(5), rng.randint(-2, 2));
            ok = smallest_symmetric_ball({x, 1 / x}, 5) ==
                 smallest_symmetric_ball({x}, 5);
        }
        c.check("symmetric ball radius invariant under inversion", ok);
    }
}

void classgroups_suite(Collector& c, std::uint64_t seed) {
    c.check("4 square classes at odd p, 8 at p=2",
            all_square_classes(7).size() == 4 && all_square_classes(2).size() == 8);
    c.check("pinned admissible classes",
            admissible_classes(5) == std::vector<Rat>{rat(2), rat(5), rat(10)} &&
                admissible_classes(7) ==
                    std::vector<Rat>{rat(1), rat(7), rat(21)} &&
                admissible_classes(2).size() == 7);
    {
        bool ok = true;
        for (long p : {3, 5, 7, 11, 13}) ok = ok && admissible_classes(p).size() == 3;
        c.check("3 admissible classes at every odd prime tried", ok);
    }
    c.check("pinned K membership",
            in_K(rat(-1), rat(2), 5) && !in_K(rat(5), rat(2), 5) &&
                minus_one_in_K(rat(2), 5) && minus_one_in_K(rat(1), 7) &&
                !minus_one_in_K(rat(3), 3));
    {
        Rng rng(seed + 17);
        bool ok = true;
        const std::array<std::pair<long, long>, 4> combos = {
            {{5, 2}, {7, 1}, {3, 3}, {2, 5}}};
        for (const auto& [p, al] : combos) {
            const Rat alpha = rat(al);
            int inside = 0, outside = 0;
            for (int i = 0; i < 80; ++i) {
                const Rat z =
                    rand_nonzero(rng) * pow_rat(rat(p), rng.randint(-2, 2));
                const Rat z2 =
                    rand_nonzero(rng) * pow_rat(rat(p), rng.randint(-2, 2));
                const bool a = in_K(z, alpha, p), b = in_K(z2, alpha, p);
                ok = ok && in_K(z * z2, alpha, p) == (a == b) &&
                     in_K(z * z, alpha, p);
                (a ? inside : outside)++;
            }
            ok = ok && inside > 0 && outside > 0;
        }
        c.check("K is an index-2 subgroup containing the squares", ok);
    }
    {
        bool ok = hyperboloid_sheets(rat(1), 5) == 1 &&
                  hyperboloid_sheets(rat(2), 5) == 2 &&
                  hyperboloid_sheets(rat(3), 7) == 1;
        for (long p : {3, 5, 7, 11, 13}) {
            const auto adm = admissible_classes(p);
            for (const Rat& beta : all_square_classes(p)) {
                const bool admissible =
                    std::find(adm.begin(), adm.end(), beta) != adm.end();
                ok = ok && hyperboloid_sheets(beta, p) == (admissible ? 2 : 1);
            }
        }
        c.check("sheet count is 1 exactly off the admissible classes", ok);
    }
    {
        bool ok = true;
        for (long p : {3, 5, 7, 13}) {
            for (const Rat& alpha : admissible_classes(p)) {
                if (((valuation(alpha, p) % 2) + 2) % 2 == 1) continue;
                for (const Rat& beta : all_square_classes(p)) {
                    const bool solvable =
                        hilbert_symbol(beta, alpha * beta, p) == 1;
                    ok = ok && solvable == in_K(beta, alpha, p) &&
                         solvable == (((valuation(beta, p) % 2) + 2) % 2 == 0);
                }
            }
        }
        c.check("unit-norm plane meets exactly the even-valuation classes", ok);
    }
    {
        bool ok = true;
        for (long p : {3, 5}) {
            for (const Rat& alpha : admissible_classes(p)) {
                for (long t : {0, 1, 2}) {
                    Rat s = 0;
                    for (long k = -t; k <= t; ++k) s += mu_shell(k, alpha, p);
                    ok = ok && trace_ball(t, alpha, p) == s;
                }
            }
        }
        c.check("ball trace equals the sum of shell measures", ok);
    }
}

void geometry_suite(Collector& c, std::uint64_t seed) {
    c.check("pinned quadratic form values",
            Q({rat(1), rat(0), rat(0)}) == 0 && Q({rat(2), rat(0), rat(1)}) == 2 &&
                Q({rat(-18), rat(5), rat(11)}) == -223);
    {
        Rng rng(seed + 19);
        bool ok = true;
        for (int i = 0; i < 60 && ok; ++i) {
            const Vec3 v = {rand_rat(rng), rand_rat(rng), rand_rat(rng)};
            const Vec3 w = {rand_rat(rng), rand_rat(rng), rand_rat(rng)};
            Vec3 sum;
            for (int j = 0; j < 3; ++j) sum[j] = v[j] + w[j];
            ok = Bpolar(v, v) == 2 * Q(v) &&
                 Bpolar(v, w) == Q(sum) - Q(v) - Q(w);
        }
        c.check("polarization identities", ok);
        ok = true;
        for (int i = 0; i < 60 && ok; ++i) {
            const Mat2 g = rand_gl2(rng), h = rand_gl2(rng);
            const Vec3 v = {rand_rat(rng), rand_rat(rng), rand_rat(rng)};
            const Rat d = det2(g);
            const Rat lam = rand_nonzero(rng);
            Mat2 gs = g;
            for (auto& row : gs)
                for (auto& e : row) e *= lam;
            ok = Q(isom_action(g, v)) == d * d * Q(v) &&
                 mat3_mul(adjoint(g), adjoint(h)) == adjoint(mat2_mul(g, h)) &&
                 mat3_det(adjoint(g)) == 1 && adjoint(gs) == adjoint(g);
        }
        c.check("action scales Q by det^2; adjoint kills scalars with det 1",
                ok);
        const Rat x = rat(3, 7);
        const Mat3 ax = adjoint({{{x, rat(0)}, {rat(0), rat(1)}}});
        c.check("diagonal adjoint moves the axis point as expected",
                mat3_vec(ax, {rat(2), rat(0), rat(1)}) ==
                    Vec3{2 * x, rat(0), 1 / x});
        c.check("pinned isotropy classification",
                semicone_classify({rat(4), rat(2), rat(1)}, 5) == rat(1) &&
                    semicone_classify({rat(0), rat(0), rat(7)}, 5) == rat(7) &&
                    !semicone_classify({rat(2), rat(0), rat(1)}, 5).has_value());
        ok = true;
        for (long p : {3, 5}) {
            for (int i = 0; i < 30 && ok; ++i) {
                const Mat2 g = rand_isom_word(rng, p, 2);
                const Rat s = rand_nonzero(rng), t = rand_rat(rng, 4);
                const Vec3 w = {s * s, s * t, t * t};
                const Rat d = det2(g);
                const auto cls = semicone_classify(w, p);
                const auto img = semicone_classify(isom_action(g, w), p);
                ok = cls && img && *img == square_class(*cls * d * d, p) &&
                     (!is_square(d, p) || *img == *cls);
            }
        }
        c.check("isotropic classes permute by the determinant class", ok);
        ok = true;
        for (long p : {3, 5}) {
            int done = 0;
            while (done < 30 && ok) {
                Mat3 m = mat3_id();
                for (int i = 0; i < 3; ++i) {
                    const long k = rng.randrange(3);
                    if (k == 0)
                        m = mat3_mul(m, nplus3(rand_rat(rng, 5)));
                    else if (k == 1)
                        m = mat3_mul(m, nminus3(rand_rat(rng, 5)));
                    else
                        m = mat3_mul(m, hdiag3(rand_nonzero(rng, 5)));
                }
                ok = is_soq(m);
                if (!ok) break;
                try {
                    const Iwasawa f = iwasawa_decompose(m);
                    ok = mat3_mul(f.nminus, mat3_mul(f.h, f.nplus)) == m;
                    ++done;
                } catch (const ChartFailure&) {
                }
            }
        }
        c.check("triangular decomposition reconstructs its input", ok);
        Mat3 w0 = mat3_id();
        w0[0][0] = rat(0);
        w0[0][2] = rat(1);
        w0[1][1] = rat(-1);
        w0[2][0] = rat(1);
        w0[2][2] = rat(0);
        bool flagged = false;
        try {
            iwasawa_decompose(w0);
        } catch (const ChartFailure&) {
            flagged = true;
        }
        c.check("decomposition rejects the coordinate flip", is_soq(w0) && flagged);
    }
}

void disc_suite(Collector& c, std::uint64_t seed, bool inject_error) {
    const Vec3 va = {rat(2), rat(0), rat(1)};
    const Vec3 vfar = {rat(50), rat(0), rat(1)};
    const Vec3 vshort = {rat(-18), rat(5), rat(11)};
    c.check("pinned membership",
            in_disc(va, rat(2), 5) && in_disc(vshort, rat(2), 5) &&
                !in_disc({rat(1), rat(0), rat(1)}, rat(2), 5));
    c.check("pinned line taxonomy",
            classify_line(va, vfar, rat(2), 5) == LineKind::Long &&
                classify_line(va, vshort, rat(2), 5) == LineKind::Short);
    {
        const BoundaryPair ends = long_boundary(va, vfar, rat(2), 5);
        bool has1 = false, has2 = false;
        for (const Vec3& e : ends.ends) {
            has1 = has1 || sphere_eq(e, {rat(1), rat(0), rat(0)}, rat(2), 5);
            has2 = has2 || sphere_eq(e, {rat(0), rat(0), rat(1)}, rat(2), 5);
        }
        c.check("pinned boundary points of the axis line", ends.exact && has1 && has2);
    }
    {
        const MultDistance md = mult_distance(va, vfar, rat(2), 5);
        const std::set<Rat> lam(md.lambda.begin(), md.lambda.end());
        c.check("pinned multiplier pair {25, 1/25}",
                md.exact && lam == std::set<Rat>{rat(25), rat(1, 25)} &&
                    r_invariant(va, vfar) == (rat(25) + 2 + rat(1, 25)) / 4);
    }
    c.check("pinned distances",
            hilbert_distance(va, vfar, rat(2), 5) == 3 &&
                hilbert_distance(va, vshort, rat(2), 5) == rat(1, 4) &&
                hilbert_distance(va, va, rat(2), 5) == 0);
    c.check("pinned ultrametric-locus decisions",
            same_ultrametric_locus(va, vshort, rat(2), 5) &&
                !same_ultrametric_locus(va, vfar, rat(2), 5));
    c.check("pinned normal form",
            reduce_to_normal_form(vshort, rat(2), 5).alpha_prime ==
                rat(-223, 121));
    {
        // Parabolic-orbit identity: the triangular group element carries the
        // displayed representative back to the base point.
        const Rat cc = rat(3, 2), b = rat(5, 7), alpha = rat(2);
        const Vec3 v = {alpha / (cc * cc) + b * b, -b * cc, cc * cc};
        const Mat2 g = {{{cc, b}, {rat(0), 1 / cc}}};
        c.check("triangular element reaches the base point",
                Q(v) == alpha &&
                    isom_action(g, v) == Vec3{alpha, rat(0), rat(1)} &&
                    isom_action(mat2_inv(g), {alpha, rat(0), rat(1)}) == v);
    }
    c.check("pinned orthogonality",
            orthogonal_lines(va, {rat(0), rat(1), rat(0)},
                             {rat(2), rat(0), rat(-1)}, rat(2), 5));
    {
        Rng rng(seed + 101);
        bool ok = true;
        std::string detail;
        std::vector<std::tuple<long, Rat, Vec3, Vec3, Rat>> corpus;
        for (long p : {3, 5, 7}) {
            for (const Rat& alpha : admissible_classes(p)) {
                const int npairs = p == 7 ? 3 : 6;
                for (const auto& [v, w] : gen_pairs(rng, alpha, p, npairs)) {
                    Rat d = hilbert_distance(v, w, alpha, p);
                    corpus.push_back({p, alpha, v, w, d});
                    if (inject_error) d += 1;
                    const OracleDistance od = oracle_distance(v, w, alpha, p);
                    if (!od.stable || od.value != d) {
                        ok = false;
                        detail = pair_str(p, alpha, v, w) + " closed=" +
                                 to_string(d) + " oracle=" + to_string(od.value);
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        c.check("closed-form distance equals the stabilized sampled distance",
                ok, detail);
        bool spec_ok = true;
        for (const auto& [p, alpha, v, w, d] : corpus) {
            if (d == 0) continue;
            const bool odd = ((valuation(alpha, p) % 2) + 2) % 2 == 1;
            bool ok_val;
            if (odd) {
                const Rat big = d - rat(1, 2);
                ok_val = big >= 0 && big.get_den() == 1;
            } else {
                ok_val = d >= 1 && d.get_den() == 1;
            }
            if (!ok_val) {
                const Rat n = d * (p - 1);
                spec_ok = spec_ok && unit_part(n, p) == 1 && valuation(n, p) <= 0;
            }
        }
        c.check("distance values follow the advertised spectrum", spec_ok);
        ok = true;
        for (long p : {3, 5}) {
            const Rat alpha = admissible_classes(p)[0];
            for (int i = 0; i < 15 && ok; ++i) {
                const auto pr = gen_pairs(rng, alpha, p, 1)[0];
                const Mat2 g = rand_gl2(rng, 4);
                ok = hilbert_distance(isom_action(g, pr.first),
                                      isom_action(g, pr.second), alpha, p) ==
                         hilbert_distance(pr.first, pr.second, alpha, p) &&
                     r_invariant(isom_action(g, pr.first),
                                 isom_action(g, pr.second)) ==
                         r_invariant(pr.first, pr.second);
            }
        }
        c.check("distance and R-invariant are isometry invariants", ok);
        ok = true;
        for (long p : {3, 5}) {
            const Rat alpha = admissible_classes(p)[0];
            std::vector<Vec3> pts;
            for (int i = 0; i < 6; ++i) pts.push_back(rand_disc(rng, alpha, p, 1));
            for (int i = 0; i < 25 && ok; ++i) {
                const Vec3& a = pts[rng.randrange(6)];
                const Vec3& b = pts[rng.randrange(6)];
                const Vec3& cc = pts[rng.randrange(6)];
                const Rat dab = hilbert_distance(a, b, alpha, p);
                const Rat dac = hilbert_distance(a, cc, alpha, p);
                const Rat dcb = hilbert_distance(cc, b, alpha, p);
                ok = dab == hilbert_distance(b, a, alpha, p) &&
                     dab <= dac + dcb &&
                     (!(dac <= 1 && dcb <= 1) || dab <= std::max(dac, dcb));
            }
            for (const Vec3& v : pts) {
                const Rat lam = rand_K(rng, alpha, p);
                ok = ok && hilbert_distance(v, v, alpha, p) == 0 &&
                     hilbert_distance(
                         v, {lam * v[0], lam * v[1], lam * v[2]}, alpha, p) == 0;
            }
        }
        c.check("metric axioms with the small-scale ultrametric refinement", ok);
        ok = true;
        for (long p : {3, 5, 7}) {
            for (const Rat& alpha : admissible_classes(p)) {
                std::set<int> labels;
                std::vector<Vec3> pts;
                for (int i = 0; i < 12; ++i) pts.push_back(rand_disc(rng, alpha, p));
                pts.push_back({alpha, rat(0), rat(1)});
                pts.push_back({alpha * p * p, rat(0), rat(1)});
                const Rat p4 = rat(p * p) * rat(p * p);
                pts.push_back({alpha * p4, rat(0), rat(1)});
                for (const Vec3& v : pts) {
                    const int lab = orbit_label(v, alpha, p);
                    labels.insert(lab);
                    const Rat lam = rand_K(rng, alpha, p);
                    const Mat2 g = rand_isom_word(rng, p, 2);
                    const Mat2 gsq = mat2_mul(g, g);
                    const Vec3 img = isom_action(
                        gsq, {lam * v[0], lam * v[1], lam * v[2]});
                    ok = ok && orbit_label(img, alpha, p) == lab;
                }
                const size_t expect = minus_one_in_K(alpha, p) ? 2 : 1;
                ok = ok && labels.size() == expect;
            }
        }
        c.check("orbit labels: invariant, with count set by -1 in K", ok);
        ok = true;
        const std::array<std::pair<long, long>, 4> combos = {
            {{5, 2}, {7, 1}, {3, 1}, {13, 13}}};
        for (const auto& [p, al] : combos) {
            const Rat alpha = rat(al);
            const Vec3 v = rand_disc(rng, alpha, p);
            const auto out = orbit_connect(v, alpha, p);
            const Vec3 base = {alpha, rat(0), rat(1)};
            if (orbit_label(v, alpha, p) == orbit_label(base, alpha, p)) {
                if (!out) {
                    ok = false;
                    break;
                }
                Vec3 scaled;
                for (int i = 0; i < 3; ++i) scaled[i] = v[i] / v[2];
                const Vec3 img = isom_action(out->g, scaled);
                Vec3 tgt;
                for (int i = 0; i < 3; ++i)
                    tgt[i] = (out->kappa / v[2]) * base[i];
                for (int i = 0; i < 3; ++i) {
                    if (img[i] == tgt[i]) continue;
                    ok = ok && (!out->exact) &&
                         valuation(img[i] - tgt[i], p) >= 8;
                }
            } else {
                ok = ok && !out;
            }
        }
        c.check("orbit witness carries the point to the base ray", ok);
        ok = true;
        for (long p : {3, 5, 7}) {
            for (const Rat& alpha : admissible_classes(p)) {
                const Mat2 sa = base_sym(alpha);
                const Vec3 base = {alpha, rat(0), rat(1)};
                for (int i = 0; i < 10 && ok; ++i) {
                    const Rat t = rand_rat(rng, 9);
                    if (1 + alpha * t * t == 0) continue;
                    const Mat2 g = stab_family(alpha, t, rng.coin());
                    const Mat2 out = sandwich(g, sa);
                    const Rat mu = out[1][1];
                    Mat2 scaled = sa;
                    for (auto& row : scaled)
                        for (auto& e : row) e *= mu;
                    ok = out == scaled && in_K(mu, alpha, p) &&
                         sphere_eq(isom_action(g, base), base, alpha, p);
                    long lo = VAL_INF;
                    for (const auto& row : g)
                        for (const auto& e : row)
                            lo = std::min(lo, valuation(e, p));
                    Mat2 gn = g;
                    for (auto& row : gn)
                        for (auto& e : row) e *= pow_rat(rat(p), -lo);
                    for (const auto& row : gn)
                        for (const auto& e : row)
                            ok = ok && valuation(e, p) >= 0;
                    ok = ok && valuation(det2(gn), p) == 0;
                    if (((valuation(alpha, p) % 2) + 2) % 2 == 0)
                        ok = ok && lat_push(gn, {0, 0, 0}, p) == TreeVertex{0, 0, 0};
                }
            }
        }
        c.check("base-point stabilizer family: fixed ray, unit lattice class",
                ok);
    }
}

void oracle_suite(Collector& c, std::uint64_t seed) {
    c.check("dual sample sizes at p=3",
            sample_dual(3, 1).size() == 4 && sample_dual(3, 2).size() == 12);
    {
        bool ok = true;
        for (const Vec3& u : sample_dual(3, 1))
            ok = ok && semicone_classify(u, 3) == rat(1);
        c.check("dual samples lie on the unit-class cone", ok);
    }
    {
        const Vec3 v = {rat(2), rat(0), rat(1)}, w = {rat(50), rat(0), rat(1)};
        std::vector<Rat> vals;
        for (long d = 1; d <= 5; ++d)
            vals.push_back(
                trace_ball(oracle_t(v, w, 5, sample_dual(5, d)), rat(2), 5));
        bool mono = true;
        for (size_t i = 0; i + 1 < vals.size(); ++i)
            mono = mono && vals[i] <= vals[i + 1];
        c.check("sampled distance is monotone in depth", mono);
        c.check("pinned sampled distances",
                oracle_distance(v, w, rat(2), 5).value == 3 &&
                    oracle_distance(v, {rat(-18), rat(5), rat(11)}, rat(2), 5)
                            .value == rat(1, 4));
    }
    {
        const Vec3 e1 = {rat(1), rat(0), rat(0)}, e2 = {rat(0), rat(0), rat(1)};
        const Vec3 v = {rat(2), rat(0), rat(1)};
        const Vec3 w = {rat(50), rat(0), rat(1)};
        const Vec3 z = {rat(2) * 81, rat(0), rat(1)};
        c.check("pinned cross-ratio on the axis pair",
                cross_ratio(e1, e2, v, w) == 25 &&
                    cross_ratio(e2, e1, v, w) == rat(1, 25) &&
                    cross_ratio(e1, e1, v, w) == 1);
        c.check("cross-ratio cocycle",
                cross_ratio(e1, e2, v, w) * cross_ratio(e1, e2, w, z) ==
                    cross_ratio(e1, e2, v, z));
    }
    {
        Rng rng(seed + 107);
        bool ok = true;
        const std::array<std::pair<long, long>, 3> combos = {
            {{3, 1}, {5, 2}, {7, 7}}};
        for (const auto& [p, al] : combos) {
            const Rat alpha = rat(al);
            int agree = 0;
            for (int i = 0; i < 60; ++i) {
                const long k = rng.randrange(3);
                Vec3 v;
                if (k == 0) {
                    v = rand_disc(rng, alpha, p);
                } else if (k == 1) {
                    v = {rand_rat(rng, 9), rand_rat(rng, 9), rand_rat(rng, 9)};
                    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
                } else {
                    const Rat y = rand_nonzero(rng);
                    v = isom_action({{{y, rat(0)}, {rat(0), rat(1)}}},
                                    {alpha, rat(0), rat(1)});
                }
                const bool ind = in_disc(v, alpha, p);
                bool dual = oracle_in_dual_check(v, alpha, p, 3);
                if (dual != ind) dual = oracle_in_dual_check(v, alpha, p, 4);
                ok = ok && dual == ind;
                ++agree;
            }
            ok = ok && agree > 40;
        }
        c.check("sampled duality agrees with the membership test", ok);
    }
    {
        const Mat3 dy = adjoint({{{rat(5), rat(0)}, {rat(0), rat(1)}}});
        const Vec3 vout = mat3_vec(dy, {rat(2), rat(0), rat(1)});
        c.check("rescaled axis point is rejected at depth 1",
                vout == Vec3{rat(10), rat(0), rat(1, 5)} &&
                    !in_disc(vout, rat(2), 5) &&
                    !oracle_in_dual_check(vout, rat(2), 5, 1));
    }
    c.check("pinned dual shapes",
            dual_description(rat(2), 5) == DualKind::ConeOnly &&
                dual_description(rat(1), 7) == DualKind::ConeAndDisc &&
                dual_description(rat(7), 7) == DualKind::ConeOnly);
    {
        const long p = 7;
        const Rat alpha = rat(1);
        const Vec3 v = {rat(1), rat(0), rat(1)}, w = {rat(1), rat(2), rat(6)};
        const Rat b = Bpolar(v, w);
        c.check("two members can pair outside K",
                in_disc(v, alpha, p) && in_disc(w, alpha, p) && b == 7 &&
                    !in_K(b, alpha, p));
        const Rat x = padic_sqrt(rat(-5), 7, 12).value;
        const Vec3 w2 = {x, rat(2), -x};
        c.check("two members can pair to exactly zero",
                square_class(Q(w2), p) == 1 && in_K(w2[0], alpha, p) &&
                    Bpolar(v, w2) == 0);
        bool cone_ok = true;
        for (long depth : {2, 3}) {
            cone_ok = cone_ok && oracle_in_dual_check(v, alpha, p, depth) &&
                      oracle_in_dual_check(w, alpha, p, depth);
        }
        c.check("cone-only sampling accepts both members", cone_ok);
        // Widening the sample with member functionals would overestimate
        // short distances: for this close pair the distance is 1/6, but the
        // member functional (1,2,6) contributes a non-unit-ball cross-ratio.
        const Vec3 vc = {rat(1), rat(0), rat(1)}, wc = {rat(64), rat(0), rat(1)};
        const Rat d_true = hilbert_distance(vc, wc, alpha, p);
        const Vec3 phi = {rat(1), rat(2), rat(6)};
        const Rat r_phi = Bpolar(phi, wc) / Bpolar(phi, vc);
        const Rat r_cone = Bpolar({rat(1), rat(0), rat(0)}, wc) /
                           Bpolar({rat(1), rat(0), rat(0)}, vc);
        const long t_bad = smallest_symmetric_ball({r_phi / r_cone}, p);
        c.check("member-augmented sampling would inflate a close distance",
                d_true == rat(1, 6) &&
                    oracle_distance(vc, wc, alpha, p).value == d_true &&
                    t_bad >= 0 && trace_ball(t_bad, alpha, p) > d_true);
    }
}

void tree_suite(Collector& c, std::uint64_t seed) {
    c.check("pinned projections",
            project({rat(2), rat(0), rat(1)}, rat(2), 5) == TreeVertex{0, 0, 0} &&
                project({rat(50), rat(0), rat(1)}, rat(2), 5) ==
                    TreeVertex{1, 0, 0});
    c.check("pinned vertex distances",
            tree_distance({0, 0, 0}, {2, 0, 0}, 5) == 2 &&
                lat_canon({{{rat(5), rat(0)}, {rat(0), rat(5)}}}, 5) ==
                    TreeVertex{0, 0, 0});
    {
        const auto nb = neighbors({0, 0, 0}, 3);
        const std::set<TreeVertex> uniq(nb.begin(), nb.end());
        bool ok = uniq.size() == 4;
        for (const TreeVertex& t : nb) {
            ok = ok && tree_distance({0, 0, 0}, t, 3) == 1 &&
                 tree_distance(t, {0, 0, 0}, 3) % 2 == 1;
        }
        c.check("4 distinct odd-parity neighbors at p=3", ok);
    }
    {
        // Exhaustive check to radius 2: adjacency coincides with distance 1.
        std::set<TreeVertex> ball = {{0, 0, 0}};
        for (const TreeVertex& u : neighbors({0, 0, 0}, 3)) {
            ball.insert(u);
            for (const TreeVertex& w : neighbors(u, 3)) ball.insert(w);
        }
        bool ok = ball.size() == 17;
        for (const TreeVertex& u : ball) {
            const auto nb = neighbors(u, 3);
            const std::set<TreeVertex> nbset(nb.begin(), nb.end());
            for (const TreeVertex& w : ball) {
                const bool adj = nbset.count(w) > 0;
                ok = ok && adj == (tree_distance(u, w, 3) == 1);
            }
        }
        c.check("adjacency equals distance 1 on the radius-2 ball", ok);
    }
    {
        Rng rng(seed + 109);
        bool ok = true;
        std::string detail;
        for (long p : {3, 5}) {
            for (const Rat& alpha : admissible_classes(p)) {
                if (((valuation(alpha, p) % 2) + 2) % 2 != 0) continue;
                for (int i = 0; i < 15 && ok; ++i) {
                    const auto pr = gen_pairs(rng, alpha, p, 1)[0];
                    const Rat d = hilbert_distance(pr.first, pr.second, alpha, p);
                    const long td = tree_distance(project(pr.first, alpha, p),
                                                  project(pr.second, alpha, p), p);
                    const Rat half = d / 2;
                    const long floor_half =
                        static_cast<long>(mpz_class(half.get_num() /
                                                    half.get_den())
                                              .get_si()) -
                        ((half < 0 && half.get_den() != 1) ? 1 : 0);
                    ok = td == floor_half;
                    if (!ok)
                        detail = pair_str(p, alpha, pr.first, pr.second) +
                                 " d=" + to_string(d) +
                                 " tree=" + std::to_string(td);
                }
                for (int i = 0; i < 10 && ok; ++i) {
                    const Vec3 v = rand_disc(rng, alpha, p);
                    const Mat2 g = rand_gl2(rng, 4);
                    ok = project(isom_action(g, v), alpha, p) ==
                         lat_push(g, project(v, alpha, p), p);
                }
            }
        }
        c.check("half-distance law and projection covariance", ok, detail);
        const BoundaryPoint e1 = boundary_point({rat(1), rat(0), rat(0)}, 5);
        const BoundaryPoint e2 = boundary_point({rat(0), rat(0), rat(1)}, 5);
        c.check("pinned boundary normalization",
                e1 == BoundaryPoint{rat(1), rat(0)} &&
                    e2 == BoundaryPoint{rat(0), rat(1)});
        c.check("pinned geodesic vertices",
                geodesic_vertices(e1, e2, 0, 2, 5) ==
                    std::vector<TreeVertex>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
        ok = true;
        const std::array<std::pair<long, long>, 2> combos = {{{3, 1}, {5, 2}}};
        for (const auto& [p, al] : combos) {
            const Rat alpha = rat(al);
            for (int i = 0; i < 8 && ok; ++i) {
                const Mat2 g = rand_isom_word(rng, p, 2);
                const Rat s =
                    pow_rat(rat(p), rng.randint(1, 2)) * rand_nonzero(rng, 5);
                const Vec3 v = isom_action(g, {alpha, rat(0), rat(1)});
                const Vec3 w = isom_action(g, {alpha * s * s, rat(0), rat(1)});
                if (sphere_eq(v, w, alpha, p)) continue;
                if (classify_line(v, w, alpha, p) != LineKind::Long) {
                    ok = false;
                    break;
                }
                auto [b1, b2] = boundary_of_long_line(v, w, alpha, p);
                std::vector<BoundaryPoint> got = {b1, b2};
                std::vector<BoundaryPoint> expect = {
                    mobius(g, {rat(1), rat(0)}, p),
                    mobius(g, {rat(0), rat(1)}, p)};
                const auto key = [](const BoundaryPoint& b) {
                    return to_string(b.a) + "|" + to_string(b.b);
                };
                std::sort(got.begin(), got.end(),
                          [&](const auto& x, const auto& y) {
                              return key(x) < key(y);
                          });
                std::sort(expect.begin(), expect.end(),
                          [&](const auto& x, const auto& y) {
                              return key(x) < key(y);
                          });
                ok = got == expect;
                if (!ok) break;
                const auto geo = geodesic_vertices(got[0], got[1], -12, 12, p);
                const Rat s4 = s * s * s * s;
                for (const Vec3& u :
                     {v, w, isom_action(g, {alpha * s4, rat(0), rat(1)})}) {
                    if (!in_disc(u, alpha, p)) continue;
                    const TreeVertex pv = project(u, alpha, p);
                    ok = ok && std::find(geo.begin(), geo.end(), pv) != geo.end();
                }
            }
        }
        c.check("long lines project into the geodesic of their endpoints", ok);
        ok = true;
        for (int i = 0; i < 15; ++i) {
            const long p = 5;
            const Rat alpha = rat(2);
            const Vec3 v = rand_disc(rng, alpha, p);
            const Rat t = pow_rat(rat(p), 2) * rand_rat(rng, 4);
            const Vec3 w = isom_action({{{rat(1), t}, {rat(0), rat(1)}}}, v);
            if (hilbert_distance(v, w, alpha, p) <= 1)
                ok = ok && project(v, alpha, p) == project(w, alpha, p);
        }
        c.check("projection is constant on unit-distance neighborhoods", ok);
    }
    {
        const std::string dot1 = export_dot({0, 0, 0}, 1, 3);
        const std::string dot2 = export_dot({0, 0, 0}, 1, 3);
        const auto count = [&](const std::string& hay, const std::string& pat) {
            size_t n = 0, pos = 0;
            while ((pos = hay.find(pat, pos)) != std::string::npos) {
                ++n;
                pos += pat.size();
            }
            return n;
        };
        c.check("graph export is deterministic with the expected shape",
                dot1 == dot2 && count(dot1, "\";\n") == 5 &&
                    count(dot1, " -- ") == 4);
    }
}

void triangle_suite(Collector& c, std::uint64_t seed) {
    const long p = 5;
    const auto p0 = in_triangle({rat(1), rat(1), rat(1)}, p);
    const auto p1 = in_triangle({rat(25), rat(1), rat(5)}, p);
    c.check("pinned memberships",
            p0 && p0->n1 == 0 && p0->n2 == 0 && p1 && p1->n1 == 2 &&
                p1->n2 == 1 && !in_triangle({rat(2), rat(1), rat(1)}, p));
    c.check("pinned distances",
            triangle_distance(*p0, *p1, p) == 3 &&
                triangle_distance(*p0, *in_triangle({rat(5), rat(1), rat(1)}, p),
                                  p) == 2 &&
                triangle_distance(*p0, *in_triangle({rat(4), rat(1), rat(4)}, p),
                                  p) == 1 &&
                triangle_distance(*p0, *p0, p) == 0);
    {
        const Rat u = rat(6), u2 = rat(26);
        c.check("pinned sub-unit distances",
                triangle_distance(
                    *p0, *in_triangle({u * u, rat(1), rat(1)}, p), p) ==
                        rat(1, 4) &&
                    triangle_distance(
                        *p0, *in_triangle({u2 * u2, rat(1), rat(1)}, p), p) ==
                        rat(1, 20));
    }
    {
        Rng rng(seed + 113);
        bool ok = true;
        std::string detail;
        for (long q : {3, 5, 7}) {
            for (int i = 0; i < 40 && ok; ++i) {
                const TrianglePoint a = rand_triangle(rng, q);
                const TrianglePoint b = rand_triangle(rng, q);
                const Rat d = triangle_distance(a, b, q);
                if (d != triangle_oracle(a, b, q)) {
                    ok = false;
                    detail = "p=" + std::to_string(q) + " d=" + to_string(d) +
                             " oracle=" + to_string(triangle_oracle(a, b, q));
                }
                if (ok && d > 1)
                    ok = hex_distance(hex_project(a), hex_project(b)) == d - 1;
                if (ok && d <= 1) {
                    const TrianglePoint cc = rand_triangle(rng, q);
                    const Rat dac = triangle_distance(a, cc, q);
                    const Rat dcb = triangle_distance(cc, b, q);
                    if (dac <= 1 && dcb <= 1) ok = d <= std::max(dac, dcb);
                }
            }
        }
        c.check("distance formula matches the finite-dual computation", ok,
                detail);
    }
    {
        std::set<std::pair<long, long>> ball;
        for (long n1 = -3; n1 <= 3; ++n1)
            for (long n2 = -3; n2 <= 3; ++n2) {
                const auto pt = in_triangle(
                    {pow_rat(rat(5), n1), rat(1), pow_rat(rat(5), n2)}, 5);
                if (pt && triangle_distance(*p0, *pt, 5) <= 2)
                    ball.insert({n1, n2});
            }
        std::set<std::pair<long, long>> expect;
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                if (hex_norm({a, b}) <= 1) expect.insert({a, b});
        c.check("radius-2 ball projects onto the 7 unit hex points",
                ball == expect && ball.size() == 7);
    }
    {
        const std::string text = hexmap_text({0, 0}, 2);
        size_t stars = 0;
        for (char ch : text)
            if (ch == '*') ++stars;
        c.check("hex map render marks exactly the ball", stars == 7 &&
                    text == hexmap_text({0, 0}, 2));
    }
}

}  // namespace

int VerifyReport::failures() const {
    int n = 0;
    for (const CheckResult& r : checks)
        if (!r.pass) ++n;
    return n;
}

VerifyReport verify_suite(const std::string& suite, std::uint64_t seed,
                          const VerifyOptions& options) {
    VerifyReport report;
    report.suite = suite;
    report.seed = seed;
    Collector c{&report.checks};
    if (suite == "padic") {
        padic_suite(c, seed);
    } else if (suite == "classgroups") {
        classgroups_suite(c, seed);
    } else if (suite == "geometry") {
        geometry_suite(c, seed);
    } else if (suite == "disc") {
        disc_suite(c, seed, options.inject_error);
    } else if (suite == "oracle") {
        oracle_suite(c, seed);
    } else if (suite == "tree") {
        tree_suite(c, seed);
    } else if (suite == "triangle") {
        triangle_suite(c, seed);
    } else if (suite == "all") {
        padic_suite(c, seed);
        classgroups_suite(c, seed);
        geometry_suite(c, seed);
        disc_suite(c, seed, options.inject_error);
        oracle_suite(c, seed);
        tree_suite(c, seed);
        triangle_suite(c, seed);
    } else {
        throw UsageError("unknown verify suite: '" + suite + "'");
    }
    return report;
}

}  // namespace padisc
