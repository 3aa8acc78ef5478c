#include "padisc/sampling.hpp"

#include "padisc/errors.hpp"

namespace padisc {

Rat rand_rat(Rng& rng, long hi) {
    return rat(rng.randint(-hi, hi), rng.randint(1, hi));
}

Rat rand_nonzero(Rng& rng, long hi) {
    for (;;) {
        const Rat r = rand_rat(rng, hi);
        if (r != 0) return r;
    }
}

Mat2 rand_gl2(Rng& rng, long hi) {
    for (;;) {
        const Mat2 g = {{{rand_rat(rng, hi), rand_rat(rng, hi)},
                         {rand_rat(rng, hi), rand_rat(rng, hi)}}};
        if (det2(g) != 0) return g;
    }
}

Mat2 rand_isom_word(Rng& rng, long p, int n) {
    Mat2 g = mat2_id();
    for (int i = 0; i < n; ++i) {
        const long k = rng.randrange(3);
        Mat2 h;
        if (k == 0) {
            h = {{{rat(1), rand_rat(rng, 6)}, {rat(0), rat(1)}}};
        } else if (k == 1) {
            h = {{{rat(1), rat(0)}, {rand_rat(rng, 6), rat(1)}}};
        } else {
            h = {{{pow_rat(rat(p), rng.randint(-1, 1)) * rand_nonzero(rng, 6),
                   rat(0)},
                  {rat(0), rat(1)}}};
        }
        g = mat2_mul(g, h);
    }
    return g;
}

Rat rand_K(Rng& rng, const Rat& alpha, long p) {
    for (;;) {
        const Rat r =
            rand_nonzero(rng, 9) * pow_rat(rat(p), rng.randint(-1, 1));
        if (in_K(r, alpha, p)) return r;
    }
}

Vec3 rand_disc(Rng& rng, const Rat& alpha, long p, int spread) {
    const Rat s =
        rand_nonzero(rng, 7) * pow_rat(rat(p), rng.randint(-spread, spread));
    const Rat lam = rand_K(rng, alpha, p);
    Vec3 v = {alpha * s * s * lam, rat(0), lam};
    v = isom_action(rand_isom_word(rng, p), v);
    if (!in_disc(v, alpha, p))
        throw DomainError("random disc point failed membership");
    return v;
}

std::vector<std::pair<Vec3, Vec3>> gen_pairs(Rng& rng, const Rat& alpha,
                                             long p, int n) {
    std::vector<std::pair<Vec3, Vec3>> pairs;
    while (static_cast<int>(pairs.size()) < n) {
        const long k = rng.randrange(4);
        Vec3 v, w;
        if (k == 0) {
            v = rand_disc(rng, alpha, p);
            w = rand_disc(rng, alpha, p);
        } else if (k == 1) {
            const Rat s =
                rand_nonzero(rng, 6) * pow_rat(rat(p), rng.randint(0, 2));
            const Rat lam = rand_K(rng, alpha, p);
            v = {alpha, rat(0), rat(1)};
            w = {alpha * s * s * lam, rat(0), lam};
            const Mat2 g = rand_isom_word(rng, p);
            v = isom_action(g, v);
            w = isom_action(g, w);
        } else if (k == 2) {
            v = rand_disc(rng, alpha, p, 0);
            const Rat t = rand_rat(rng, 5) * pow_rat(rat(p), rng.randint(1, 2));
            w = isom_action({{{rat(1), t}, {rat(0), rat(1)}}}, v);
        } else {
            const Rat u =
                1 + pow_rat(rat(p), rng.randint(1, 3)) * rand_rat(rng, 5);
            if (u == 0) continue;
            v = {alpha, rat(0), rat(1)};
            w = {alpha * u * u, rat(0), rat(1)};
            const Mat2 g = rand_isom_word(rng, p);
            v = isom_action(g, v);
            w = isom_action(g, w);
        }
        if (!sphere_eq(v, w, alpha, p)) pairs.push_back({v, w});
    }
    return pairs;
}

TrianglePoint rand_triangle(Rng& rng, long p) {
    std::vector<long> bs;
    for (long b = 1; b < 9; ++b)
        if (b % p != 0) bs.push_back(b);
    std::array<Rat, 2> us;
    for (int i = 0; i < 2; ++i) {
        const Rat w = rand_nonzero(rng, 6);
        Rat u = w * w;
        if (rng.randrange(10) < 7) {
            u *= 1 + pow_rat(rat(p), rng.randint(1, 3)) *
                         rat(rng.randint(-9, 9),
                             bs[static_cast<size_t>(rng.randrange(
                                 static_cast<long>(bs.size())))]);
        }
        us[i] = u;
    }
    const long n1 = rng.randint(-3, 3), n2 = rng.randint(-3, 3);
    const Vec3 v = {pow_rat(rat(p), n1) * us[0], rat(1),
                    pow_rat(rat(p), n2) * us[1]};
    const auto pt = in_triangle(v, p);
    if (!pt) throw DomainError("random triangle point failed membership");
    return *pt;
}

}  // namespace padisc
