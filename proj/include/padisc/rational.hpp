#ifndef PADISC_RATIONAL_HPP
#define PADISC_RATIONAL_HPP

#include <gmpxx.h>

#include <array>
#include <string>

namespace padisc {

using Int = mpz_class;
using Rat = mpq_class;

using Vec3 = std::array<Rat, 3>;
using Mat2 = std::array<std::array<Rat, 2>, 2>;
using Mat3 = std::array<std::array<Rat, 3>, 3>;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& n, const Int& d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// p^e for any integer exponent (negative exponents give 1/p^{-e}).
Rat pow_rat(const Rat& base, long e);

// p^e as an integer, e >= 0.
Int pow_int(long p, long e);

// Parse "n" or "n/d"; throws UsageError on malformed input.
Rat parse_rat(const std::string& s);

// Parse "x,y,z" where each coordinate is a rational string.
Vec3 parse_vec3(const std::string& s);

std::string to_string(const Rat& x);
std::string to_string(const Vec3& v);

Rat det2(const Mat2& g);
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_inv(const Mat2& a);
Mat2 mat2_id();

Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Vec3 mat3_vec(const Mat3& m, const Vec3& v);
Rat mat3_det(const Mat3& m);
Mat3 mat3_id();

}  // namespace padisc

#endif
