#include "padisc/disc.hpp"

#include <algorithm>

#include "padisc/errors.hpp"

namespace padisc {

namespace {

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Internal non-throwing pencil taxonomy; the public classify_line raises
// SamePoint for a vanishing discriminant.
enum class Pencil { Same, Long, Short };

Pencil pencil_kind(const Vec3& v, const Vec3& w, long p) {
    const Rat d = line_disc(v, w);
    if (d == 0) return Pencil::Same;
    return is_square(d, p) ? Pencil::Long : Pencil::Short;
}

Rat mult_invariant(const Rat& r) { return (r + 2 + 1 / r) / 4; }

// Floor division matching the prototype's integer semantics.
long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long mod2(long a) { return ((a % 2) + 2) % 2; }

}  // namespace

bool sphere_eq(const Vec3& v, const Vec3& w, const Rat& alpha, long p) {
    bool have = false;
    Rat mu;
    for (int i = 0; i < 3; ++i) {
        if ((v[i] == 0) != (w[i] == 0)) return false;
        if (v[i] != 0) {
            const Rat r = w[i] / v[i];
            if (!have) {
                mu = r;
                have = true;
            } else if (r != mu) {
                return false;
            }
        }
    }
    return have && in_K(mu, alpha, p);
}

bool sphere_eq_proj(const Vec3& v, const Vec3& w) {
    bool have = false;
    Rat mu;
    for (int i = 0; i < 3; ++i) {
        if ((v[i] == 0) != (w[i] == 0)) return false;
        if (v[i] != 0) {
            const Rat r = w[i] / v[i];
            if (!have) {
                mu = r;
                have = true;
            } else if (r != mu) {
                return false;
            }
        }
    }
    return have;
}

bool in_disc(const Vec3& v, const Rat& alpha, long p) {
    if (is_zero(v)) throw ZeroVector();
    const Rat q = Q(v);
    if (q == 0 || square_class(q, p) != square_class(alpha, p)) return false;
    if (v[0] == 0 || !in_K(v[0], alpha, p)) return false;
    // z in K_alpha is provably implied by the two tests above; enforce it
    // as an internal invariant rather than trusting the derivation.
    if (v[2] == 0 || !in_K(v[2], alpha, p))
        throw DomainError("membership invariant violated: z-coordinate class");
    return true;
}

std::optional<Vec3> disc_rep(const Vec3& v, const Rat& alpha, long p) {
    if (v[0] == 0) return std::nullopt;
    const Rat q = Q(v);
    if (q == 0 || square_class(q, p) != square_class(alpha, p))
        return std::nullopt;
    if (in_K(v[0], alpha, p)) return v;
    const long u = p != 2 ? smallest_nonresidue(p) : 5;
    for (const Rat& lam :
         {rat(p), rat(u), rat(u * p), rat(-1), rat(-p)}) {
        if (in_K(lam * v[0], alpha, p))
            return Vec3{lam * v[0], lam * v[1], lam * v[2]};
    }
    return std::nullopt;
}

Rat line_disc(const Vec3& v, const Vec3& w) {
    const Rat b = Bpolar(v, w);
    return b * b - 4 * Q(v) * Q(w);
}

LineKind classify_line(const Vec3& v, const Vec3& w, const Rat& alpha, long p) {
    (void)alpha;
    switch (pencil_kind(v, w, p)) {
        case Pencil::Same: throw SamePoint();
        case Pencil::Long: return LineKind::Long;
        default: return LineKind::Short;
    }
}

BoundaryPair long_boundary(const Vec3& v, const Vec3& w, const Rat& alpha,
                           long p, long N) {
    (void)alpha;
    const Rat d = line_disc(v, w);
    if (d == 0) throw SamePoint();
    if (!is_square(d, p)) throw NotLongLine();
    const Rat b = Bpolar(v, w);
    const Rat qv = Q(v);
    const PadicApprox s = padic_sqrt(d, p, N);
    BoundaryPair out;
    out.exact = s.exact;
    int idx = 0;
    for (int sg : {1, -1}) {
        const Rat root = (-b + sg * s.value) / (2 * qv);
        Vec3 e;
        for (int i = 0; i < 3; ++i) e[i] = (root * v[i] + w[i]) / (sg * s.value);
        out.ends[idx++] = e;
    }
    return out;
}

Rat r_invariant(const Vec3& v, const Vec3& w) {
    const Rat b = Bpolar(v, w);
    const Rat qq = 4 * Q(v) * Q(w);
    if (qq == 0) throw DomainError("R-invariant needs anisotropic points");
    return b * b / qq;
}

MultDistance mult_distance(const Vec3& v, const Vec3& w, const Rat& alpha,
                           long p, long N) {
    (void)alpha;
    const Rat d = line_disc(v, w);
    if (d == 0) throw SamePoint();
    if (!is_square(d, p)) throw NotLongLine();
    const Rat b = Bpolar(v, w);
    const Rat qq = Q(v) * Q(w);
    const PadicApprox s = padic_sqrt(d, p, N);
    MultDistance out;
    out.r = r_invariant(v, w);
    out.lambda = {(b * b - 2 * qq + b * s.value) / (2 * qq),
                  (b * b - 2 * qq - b * s.value) / (2 * qq)};
    out.exact = s.exact;
    return out;
}

Rat hilbert_distance(const Vec3& v, const Vec3& w, const Rat& alpha, long p) {
    if (p == 2) throw OddPrimeOnly();
    if (!in_disc(v, alpha, p) || !in_disc(w, alpha, p)) throw NotInDisc();
    if (sphere_eq(v, w, alpha, p)) return rat(0);
    const Rat b = Bpolar(v, w);
    const Rat qq = Q(v) * Q(w);
    const Rat d = b * b - 4 * qq;
    if (d == 0)
        throw DomainError("distinct disc points are never mutually tangent");
    const long v4t = valuation(d, p) - valuation(qq, p);
    long t;
    if (is_square(d, p)) {
        if (v4t <= 0) {
            t = -v4t;
            if (mod2(valuation(alpha, p)) == 0 && mod2(t) != 0)
                throw DomainError("long-line exponent parity violated");
        } else {
            if (mod2(v4t) != 0)
                throw DomainError("long-line valuation parity violated");
            t = -(v4t / 2);
        }
        return trace_ball(t, alpha, p);
    }
    if (v4t < 0) throw DomainError("short line cannot leave the unit ball");
    const long m = floordiv(v4t + 1, 2);
    return trace_ball(-m, alpha, p);
}

NormalForm reduce_to_normal_form(const Vec3& v, const Rat& alpha, long p) {
    if (!in_disc(v, alpha, p)) throw NotInDisc();
    const Rat x = v[0], y = v[1], z = v[2];
    const Vec3 scaled = {x / z, y / z, rat(1)};
    const Mat2 g = {{{rat(1), -y / z}, {rat(0), rat(1)}}};
    const Vec3 nf = isom_action(g, scaled);
    const Rat alpha_prime = Q(v) / (z * z);
    if (nf != Vec3{alpha_prime, rat(0), rat(1)})
        throw DomainError("normal-form shear failed");
    return {g, alpha_prime};
}

bool circle_contains(const Vec3& center, const Rat& r, const Vec3& v,
                     const Rat& alpha, long p) {
    if (r == 0) throw DegenerateRadii();
    if (pencil_kind(center, v, p) != Pencil::Long) return false;
    (void)alpha;
    return r_invariant(center, v) == mult_invariant(r);
}

namespace {

// Solve the restriction of {B(cref,P)^2 = 4 Q(cref) Rref Q(P)} to the
// plane {Bpolar(n, P) = 0}; keep candidates that rescale into the disc and
// satisfy both circle invariants (exactly when the arithmetic is exact,
// else to valuation depth N/2).
std::pair<std::vector<Vec3>, bool> plane_circle_candidates(
    const Vec3& n, const Vec3& cref, const Rat& rref, const Vec3& c1,
    const Rat& r1, const Vec3& c2, const Rat& r2, const Rat& alpha, long p,
    long N, bool nexact) {
    const auto [g, h] = perp_basis(n);
    const Rat qr = Q(cref);
    const Rat bg = Bpolar(cref, g), bh = Bpolar(cref, h);
    const Rat qa = bg * bg - 4 * qr * rref * Q(g);
    const Rat qb = 2 * bg * bh - 4 * qr * rref * Bpolar(g, h);
    const Rat qc = bh * bh - 4 * qr * rref * Q(h);
    struct Root {
        Rat s, t;
        bool exact;
    };
    std::vector<Root> roots;
    if (qa == 0 && qb == 0 && qc == 0) return {{}, true};
    if (qa == 0) {
        roots.push_back({rat(1), rat(0), true});
        if (qb != 0) roots.push_back({-qc / qb, rat(1), true});
    } else {
        const Rat dq = qb * qb - 4 * qa * qc;
        if (dq == 0) {
            roots.push_back({-qb / (2 * qa), rat(1), true});
        } else if (is_square(dq, p)) {
            Rat rs;
            if (rational_sqrt(dq, rs)) {
                roots.push_back({(-qb + rs) / (2 * qa), rat(1), true});
                roots.push_back({(-qb - rs) / (2 * qa), rat(1), true});
            } else {
                const PadicApprox sq = padic_sqrt(dq, p, N);
                roots.push_back({(-qb + sq.value) / (2 * qa), rat(1), false});
                roots.push_back({(-qb - sq.value) / (2 * qa), rat(1), false});
            }
        }
    }
    std::vector<Vec3> pts;
    std::vector<bool> exacts;
    for (const Root& root : roots) {
        const bool cex = root.exact && nexact;
        Vec3 cand;
        for (int i = 0; i < 3; ++i) cand[i] = root.s * g[i] + root.t * h[i];
        if (is_zero(cand)) continue;
        const auto rep = disc_rep(cand, alpha, p);
        if (!rep) continue;
        const Rat res1 = r_invariant(c1, *rep) - r1;
        const Rat res2 = r_invariant(c2, *rep) - r2;
        if (cex) {
            if (res1 != 0 || res2 != 0) continue;
        } else {
            const auto okv = [&](const Rat& d) {
                return d == 0 || valuation(d, p) >= N / 2;
            };
            if (!okv(res1) || !okv(res2)) continue;
        }
        bool dup = false;
        for (const Vec3& prev : pts)
            if (sphere_eq_proj(*rep, prev)) {
                dup = true;
                break;
            }
        if (dup) continue;
        pts.push_back(*rep);
        exacts.push_back(cex);
    }
    bool all_exact = true;
    for (bool e : exacts) all_exact = all_exact && e;
    return {pts, all_exact};
}

}  // namespace

CircleIntersection circle_intersection(const Vec3& c1, const Rat& r1,
                                       const Vec3& c2, const Rat& r2,
                                       const Rat& alpha, long p, long N) {
    if (r1 == 0 || r2 == 0) throw DegenerateRadii();
    if (classify_line(c1, c2, alpha, p) != LineKind::Long) throw NotLongLine();
    const Rat rr1 = mult_invariant(r1);
    const Rat rr2 = mult_invariant(r2);
    const Rat q1 = Q(c1), q2 = Q(c2);
    if (rr1 == 0 && rr2 == 0) {
        // Both polar circles: B(c1,P) = B(c2,P) = 0 has a unique
        // projective solution.
        const auto rep = disc_rep(third_perp(c1, c2), alpha, p);
        if (rep) return {{*rep}, true};
        return {{}, true};
    }
    struct Branch {
        Vec3 n;
        bool exact;
    };
    std::vector<Branch> branches;
    Vec3 cref;
    Rat rref;
    if (rr1 == 0) {
        branches.push_back({c1, true});
        cref = c2;
        rref = rr2;
    } else if (rr2 == 0) {
        branches.push_back({c2, true});
        cref = c1;
        rref = rr1;
    } else {
        const Rat w = (q1 * rr1) / (q2 * rr2);
        if (!is_square(w, p)) return {{}, true};
        Rat wroot;
        bool wex = true;
        if (!rational_sqrt(w, wroot)) {
            const PadicApprox sq = padic_sqrt(w, p, N);
            wroot = sq.value;
            wex = sq.exact;
        }
        for (int sg : {1, -1}) {
            Vec3 n;
            for (int i = 0; i < 3; ++i) n[i] = c1[i] - sg * wroot * c2[i];
            if (!is_zero(n)) branches.push_back({n, wex});
        }
        cref = c1;
        rref = rr1;
    }
    std::vector<std::pair<std::vector<Vec3>, bool>> results;
    for (const Branch& br : branches) {
        auto res = plane_circle_candidates(br.n, cref, rref, c1, rr1, c2, rr2,
                                           alpha, p, N, br.exact);
        if (!res.first.empty()) results.push_back(std::move(res));
    }
    if (results.empty()) return {{}, true};
    // Deterministic branch selection: exact solutions first, then the +w
    // branch (insertion order is preserved by the stable sort).
    std::stable_sort(results.begin(), results.end(),
                     [](const auto& a, const auto& b) {
                         return a.second && !b.second;
                     });
    return {results[0].first, results[0].second};
}

AxisCensus axis_circle_solutions(const Vec3& c1, const Rat& r1, const Vec3& c2,
                                 const Rat& r2, const Rat& alpha, long p) {
    if (c1[1] != 0 || c2[1] != 0 || c1[2] != 1 || c2[2] != 1)
        throw DomainError("census requires axis-centered circles with z = 1");
    const Rat a = c1[0], ap = c2[0];
    const Rat rr1 = mult_invariant(r1);
    const Rat rr2 = mult_invariant(r2);
    const Rat a1 = 2 * a - 4 * a * rr1, b1 = a * a, k1 = 4 * a * rr1;
    const Rat a2 = 2 * ap - 4 * ap * rr2, b2 = ap * ap, k2 = 4 * ap * rr2;
    const Rat da = a1 - a2, db = b1 - b2, dk = k1 - k2;
    std::vector<std::pair<Rat, Rat>> sols;  // (X, T) with T = Y^2
    if (da == 0) {
        if (dk == 0) throw DomainError("identical invariant conics");
        const Rat t = -db / dk;
        const Rat disc = a1 * a1 - 4 * (b1 + k1 * t);
        if (is_square(disc, p)) {
            Rat rs;
            if (!rational_sqrt(disc, rs))
                throw DomainError("irrational X in axis census");
            sols.push_back({(-a1 + rs) / 2, t});
            sols.push_back({(-a1 - rs) / 2, t});
        }
    } else {
        const Rat u = -db / da, v0 = -dk / da;
        const Rat qt2 = v0 * v0;
        const Rat qt1 = 2 * u * v0 + a1 * v0 + k1;
        const Rat qt0 = u * u + a1 * u + b1;
        if (qt2 == 0) {
            if (qt1 != 0) sols.push_back({u + v0 * (-qt0 / qt1), -qt0 / qt1});
        } else {
            const Rat disc = qt1 * qt1 - 4 * qt2 * qt0;
            if (disc == 0) {
                const Rat t = -qt1 / (2 * qt2);
                sols.push_back({u + v0 * t, t});
            } else if (is_square(disc, p)) {
                Rat rs;
                if (!rational_sqrt(disc, rs))
                    throw DomainError("irrational T pair in axis census");
                for (int sg : {1, -1}) {
                    const Rat t = (-qt1 + sg * rs) / (2 * qt2);
                    sols.push_back({u + v0 * t, t});
                }
            }
        }
    }
    AxisCensus out;
    for (const auto& [x, t] : sols) {
        if (t == 0) {
            const auto rep = disc_rep({x, rat(0), rat(1)}, alpha, p);
            if (rep) {
                ++out.count;
                out.rational_points.push_back(*rep);
            }
            continue;
        }
        if (!is_square(t, p)) continue;
        const Rat qv = x - t;
        if (x == 0 || qv == 0 ||
            square_class(qv, p) != square_class(alpha, p))
            continue;
        out.count += 2;
        Rat rt;
        if (rational_sqrt(t, rt)) {
            for (int sg : {1, -1}) {
                const auto rep = disc_rep({x, sg * rt, rat(1)}, alpha, p);
                if (!rep) throw DomainError("census point left the disc");
                out.rational_points.push_back(*rep);
            }
        }
    }
    return out;
}

bool orthogonal_lines(const Vec3& base, const Vec3& dir1, const Vec3& dir2,
                      const Rat& alpha, long p) {
    (void)alpha;
    (void)p;
    if (is_zero(dir1) || is_zero(dir2)) throw ZeroVector();
    if (Bpolar(base, dir1) != 0 || Bpolar(base, dir2) != 0) throw NotInPerp();
    return Bpolar(dir1, dir2) == 0;
}

bool same_ultrametric_locus(const Vec3& v, const Vec3& w, const Rat& alpha,
                            long p) {
    return hilbert_distance(v, w, alpha, p) <= 1;
}

DualKind dual_description(const Rat& alpha, long p) {
    if (!is_square(rat(-1), p) && square_class(alpha, p) == 1)
        return DualKind::ConeAndDisc;
    return DualKind::ConeOnly;
}

NormFormSolution solve_norm_form(const Rat& target, const Rat& alpha, long p,
                                 long N) {
    if (target == 0) throw DomainError("norm form target must be nonzero");
    long k2 = valuation(target, p);
    k2 = (k2 - mod2(k2)) / 2;
    const Rat sc = pow_rat(rat(p), k2);
    const Rat t0 = target / (sc * sc);
    if (is_square(t0, p)) {
        const PadicApprox r = padic_sqrt(t0, p, N);
        return {sc * r.value, rat(0), r.exact};
    }
    if (is_square(-alpha, p)) {
        const Rat d0 = (1 + t0) / 2;
        const Rat rem = (t0 - d0 * d0) / alpha;
        const PadicApprox e0 = padic_sqrt(rem, p, N);
        return {sc * d0, sc * e0.value, e0.exact};
    }
    for (long r = 0; r < p * p; ++r) {
        const Rat d0 = rat(r);
        const Rat rem = (t0 - d0 * d0) / alpha;
        if (rem != 0 && is_square(rem, p)) {
            const PadicApprox e0 = padic_sqrt(rem, p, N);
            return {sc * d0, sc * e0.value, e0.exact};
        }
    }
    throw DomainError("target not representable: not in K_alpha");
}

int orbit_label(const Vec3& v, const Rat& alpha, long p) {
    if (!minus_one_in_K(alpha, p)) return 0;
    const Rat z = v[2];
    const Rat sig = Q(v) / (alpha * z * z);
    if (mod2(valuation(sig, p)) != 0)
        throw DomainError("orbit invariant has odd valuation");
    const long m = floordiv(valuation(sig, p), 2);
    const Rat u = unit_part(sig, p);
    if (p == 2) {
        const Int wroot = hensel_sqrt_unit(u, 2, 5);
        const Rat scaled = pow_rat(rat(2), m) * Rat(wroot % 8);
        return in_K(scaled, alpha, p) ? 0 : 1;
    }
    if (mod2(valuation(alpha, p)) == 0) return static_cast<int>(mod2(m));
    const Rat u0 = unit_part(alpha, p);
    Int pw;
    const Int base = mod_pk(u, Int(p));
    mpz_powm(pw.get_mpz_t(), base.get_mpz_t(), Int((p - 1) / 4).get_mpz_t(),
             Int(p).get_mpz_t());
    const int lw = pw == 1 ? 1 : -1;
    const int chi = (mod2(m) != 0 ? legendre(u0, p) : 1) * lw;
    return chi == 1 ? 0 : 1;
}

std::optional<OrbitWitness> orbit_connect(const Vec3& v, const Rat& alpha,
                                          long p, long N) {
    const Rat x = v[0], y = v[1], z = v[2];
    const Mat2 g1 = {{{rat(1), -y / z}, {rat(0), rat(1)}}};
    const Rat sig = Q(v) / (alpha * z * z);
    const PadicApprox s = padic_sqrt(sig, p, N);
    Rat k;
    bool found = false;
    for (const Rat& cand : {s.value, Rat(-s.value)}) {
        if (in_K(cand, alpha, p)) {
            k = cand;
            found = true;
            break;
        }
    }
    if (!found) return std::nullopt;
    const NormFormSolution nf = solve_norm_form(k, alpha, p, N);
    const Mat2 h = {{{nf.d / k, -alpha * nf.e}, {nf.e / k, nf.d}}};
    return OrbitWitness{mat2_mul(h, g1), z * k, s.exact && nf.exact};
}

int sheet_label(const Vec3& v, const Rat& beta, long p) {
    if (is_square(-beta, p)) return 0;
    if (v[2] == 0) throw DomainError("sheet label needs z != 0");
    return in_K(v[2], beta, p) ? 0 : 1;
}

std::pair<Mat2, Vec3> sheet_reduce(const Vec3& v, const Rat& beta, long p) {
    (void)beta;
    (void)p;
    Mat2 g = mat2_id();
    Vec3 w = v;
    if (w[2] == 0) {
        Mat2 g0;
        if (w[0] != 0)
            g0 = {{{rat(0), rat(-1)}, {rat(1), rat(0)}}};
        else
            g0 = {{{rat(1), rat(0)}, {rat(1), rat(1)}}};
        g = g0;
        w = isom_action(g0, w);
    }
    const Mat2 sh = {{{rat(1), -w[1] / w[2]}, {rat(0), rat(1)}}};
    g = mat2_mul(sh, g);
    w = isom_action(sh, w);
    if (w[1] != 0 || w[2] == 0) throw DomainError("sheet reduction failed");
    return {g, w};
}

SheetConnection sheet_connect(const Vec3& v, const Vec3& w, const Rat& beta,
                              long p, long N) {
    if (Q(v) != beta || Q(w) != beta)
        throw DomainError("points must lie on the affine quadric");
    const auto [gv, rv] = sheet_reduce(v, beta, p);
    const auto [gw, rw] = sheet_reduce(w, beta, p);
    const Rat x = rv[0], z = rv[2];
    const Rat zp = rw[2];
    const Rat lam = zp / z;
    if (!in_K(lam, beta, p)) throw DomainError("points lie on different sheets");
    const NormFormSolution nf = solve_norm_form(lam, beta, p, N);
    const Rat tau = 1 / lam;
    const Mat2 gmid = {{{nf.d * tau, -nf.e * tau * x}, {nf.e * z, nf.d}}};
    return {mat2_mul(mat2_inv(gw), mat2_mul(gmid, gv)), nf.exact};
}

Mat2 stab_family(const Rat& alpha, const Rat& t, bool mirror) {
    const Rat den = 1 + alpha * t * t;
    if (den == 0) throw DomainError("parameter hits the conic pole");
    const Rat a = (1 - alpha * t * t) / den;
    const Rat c = 2 * t / den;
    Mat2 g = {{{a, -alpha * c}, {c, a}}};
    if (mirror) g = mat2_mul(g, {{{rat(1), rat(0)}, {rat(0), rat(-1)}}});
    return g;
}

StabMinusOne stab_minus_one(const Rat& alpha, long p, long N) {
    const NormFormSolution nf = solve_norm_form(rat(-1), alpha, p, N);
    return {{{{nf.d, -alpha * nf.e}, {nf.e, nf.d}}}, nf.exact};
}

Mat2 base_sym(const Rat& alpha) {
    return {{{alpha, rat(0)}, {rat(0), rat(1)}}};
}

Mat2 sandwich(const Mat2& g, const Mat2& s) {
    const Mat2 gt = {{{g[0][0], g[1][0]}, {g[0][1], g[1][1]}}};
    return mat2_mul(g, mat2_mul(s, gt));
}

}  // namespace padisc
