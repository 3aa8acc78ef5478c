#include "padisc/padic.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "padisc/errors.hpp"

namespace padisc {

Rat pow_rat(const Rat& base, long e) {
    const unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
    if (e < 0) {
        if (num == 0) throw DomainError("zero to a negative power");
        std::swap(num, den);
    }
    return rat(num, den);
}

Int pow_int(long p, long e) {
    assert(e >= 0);
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
    return out;
}

Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    Int n, d;
    if (num.empty() || den.empty() ||
        mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0 ||
        mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) {
        throw UsageError("malformed rational: '" + s + "'");
    }
    if (d == 0) throw UsageError("zero denominator: '" + s + "'");
    return rat(n, d);
}

Vec3 parse_vec3(const std::string& s) {
    std::istringstream in(s);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ',')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("expected 'x,y,z': '" + s + "'");
    return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])};
}

std::string to_string(const Rat& x) { return x.get_str(); }

std::string to_string(const Vec3& v) {
    return to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]);
}

Rat det2(const Mat2& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {{{a[0][0] * b[0][0] + a[0][1] * b[1][0],
              a[0][0] * b[0][1] + a[0][1] * b[1][1]},
             {a[1][0] * b[0][0] + a[1][1] * b[1][0],
              a[1][0] * b[0][1] + a[1][1] * b[1][1]}}};
}

Mat2 mat2_inv(const Mat2& a) {
    const Rat d = det2(a);
    if (d == 0) throw DomainError("singular 2x2 matrix");
    return {{{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}}};
}

Mat2 mat2_id() { return {{{rat(1), rat(0)}, {rat(0), rat(1)}}}; }

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

Vec3 mat3_vec(const Mat3& m, const Vec3& v) {
    Vec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

Rat mat3_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_id() {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = rat(i == j ? 1 : 0);
    return out;
}

long valuation(const Rat& x, long p) {
    if (x == 0) return VAL_INF;
    const Int pz(p);
    Int scratch;
    const long vn = static_cast<long>(mpz_remove(
        scratch.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(
        scratch.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

Rat unit_part(const Rat& x, long p) {
    if (x == 0) throw DomainError("unit part of zero");
    return x * pow_rat(rat(p), -valuation(x, p));
}

Int mod_pk(const Rat& x, const Int& pk) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(),
                   pk.get_mpz_t()) == 0) {
        throw DomainError("denominator not invertible modulo the p-power");
    }
    Int r = x.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pk.get_mpz_t());
    return r;
}

int legendre(const Rat& u, long p) {
    const Int r = mod_pk(u, Int(p));
    if (r == 0) throw DomainError("residue symbol of a non-unit");
    const Int pz(p);
    return mpz_legendre(r.get_mpz_t(), pz.get_mpz_t());
}

long smallest_nonresidue(long p) {
    for (long n = 2; n < p; ++n)
        if (legendre(rat(n), p) == -1) return n;
    throw DomainError("no nonresidue found; is p an odd prime?");
}

bool is_square(const Rat& x, long p) {
    if (x == 0) return false;
    if (valuation(x, p) % 2 != 0) return false;
    const Rat u = unit_part(x, p);
    if (p == 2) return mod_pk(u, Int(8)) == 1;
    return legendre(u, p) == 1;
}

Rat square_class(const Rat& x, long p) {
    if (x == 0) throw DomainError("square class of zero");
    const long v = ((valuation(x, p) % 2) + 2) % 2;
    const Rat u = unit_part(x, p);
    long s;
    if (p == 2) {
        const long m8 = mod_pk(u, Int(8)).get_si();
        switch (m8) {
            case 1: s = 1; break;
            case 7: s = -1; break;
            case 5: s = 5; break;
            default: s = -5; break;  // m8 == 3
        }
    } else {
        s = legendre(u, p) == 1 ? 1 : smallest_nonresidue(p);
    }
    return rat(s) * pow_rat(rat(p), v);
}

bool rational_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) == 0 ||
        mpz_perfect_square_p(x.get_den().get_mpz_t()) == 0) {
        return false;
    }
    Int a, b;
    mpz_sqrt(a.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), x.get_den().get_mpz_t());
    out = rat(a, b);
    return true;
}

Int hensel_sqrt_unit(const Rat& u, long p, long N) {
    if (p == 2) {
        const long M = N + 3;
        const Int t = mod_pk(u, pow_int(2, M));
        if (t % 8 != 1) throw NotASquare("unit is not a square mod 8");
        Int r = 1;
        for (long k = 3; k < M; ++k) {
            Int q;
            mpz_fdiv_q_2exp(q.get_mpz_t(), Int(r * r - t).get_mpz_t(),
                            static_cast<mp_bitcnt_t>(k));
            if (mpz_odd_p(q.get_mpz_t())) r += pow_int(2, k - 1);
        }
        const Int m2 = pow_int(2, M);
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m2.get_mpz_t());
        if (r % 4 == 3) r = m2 - r;
        Int out;
        mpz_mod(out.get_mpz_t(), r.get_mpz_t(), pow_int(2, N).get_mpz_t());
        return out;
    }
    const long M = std::max(N, 1L);
    const Int t = mod_pk(u, pow_int(p, M));
    Int r = 0;
    for (long c = 1; c < p; ++c) {
        if ((Int(c) * c - t) % p == 0) {
            r = c;
            break;
        }
    }
    if (r == 0) throw NotASquare("unit is not a square mod p");
    long k = 1;
    while (k < M) {
        k = std::min(2 * k, M);
        const Int pk = pow_int(p, k);
        Int rinv, half;
        mpz_invert(rinv.get_mpz_t(), r.get_mpz_t(), pk.get_mpz_t());
        mpz_invert(half.get_mpz_t(), Int(2).get_mpz_t(), pk.get_mpz_t());
        r = (r + t * rinv) * half;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pk.get_mpz_t());
    }
    if (r % p > (p - 1) / 2) r = pow_int(p, M) - r;
    Int out;
    mpz_mod(out.get_mpz_t(), r.get_mpz_t(), pow_int(p, N).get_mpz_t());
    return out;
}

PadicApprox padic_sqrt(const Rat& x, long p, long N) {
    if (x == 0) throw DomainError("square root of zero has no unit part");
    const long v = valuation(x, p);
    if (v % 2 != 0) throw NotASquare("odd valuation");
    Rat r;
    if (rational_sqrt(x, r)) {
        const Rat u = unit_part(r, p);
        if (p == 2) {
            if (mod_pk(u, Int(4)) == 3) r = -r;
        } else if (mod_pk(u, Int(p)) > (p - 1) / 2) {
            r = -r;
        }
        return {r, true};
    }
    const Rat u = unit_part(x, p);
    if (!is_square(u, p)) throw NotASquare("unit part is not a square");
    return {pow_rat(rat(p), v / 2) * Rat(hensel_sqrt_unit(u, p, N)), false};
}

int hilbert_symbol(const Rat& a, const Rat& b, long p) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
    const long al = valuation(a, p), bl = valuation(b, p);
    const Rat u = unit_part(a, p), w = unit_part(b, p);
    const bool alodd = al % 2 != 0, blodd = bl % 2 != 0;
    if (p != 2) {
        int sign = 1;
        if (alodd && blodd && p % 4 == 3) sign = -sign;
        if (blodd) sign *= legendre(u, p);
        if (alodd) sign *= legendre(w, p);
        return sign;
    }
    const long m8u = mod_pk(u, Int(8)).get_si();
    const long m8w = mod_pk(w, Int(8)).get_si();
    const auto eps = [](long m) { return m % 4 == 1 ? 0L : 1L; };
    const auto om = [](long m) { return (m == 1 || m == 7) ? 0L : 1L; };
    const long e = eps(m8u) * eps(m8w) + al * om(m8w) + bl * om(m8u);
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
}

Rat haar_ball_measure(long t, long p) {
    if (t <= VAL_NEG_INF) return rat(0);
    if (t >= 0) return rat(t + 1);
    return pow_rat(rat(p), t + 1) / (p - 1);
}

long smallest_symmetric_ball(const std::vector<Rat>& values, long p) {
    long t = VAL_NEG_INF;
    for (const Rat& x : values) {
        if (x == 0) throw DomainError("symmetric ball of zero");
        if (x == 1) continue;
        t = std::max(t, -valuation(x - 1, p));
        t = std::max(t, -valuation(1 / x - 1, p));
    }
    return t;
}

}  // namespace padisc
