#ifndef PADISC_PADIC_HPP
#define PADISC_PADIC_HPP

#include <limits>
#include <vector>

#include "padisc/rational.hpp"

namespace padisc {

// Valuations are plain machine integers with two sentinel infinities, so
// that v(0) and the radius of an empty/trivial symmetric ball have homes.
inline constexpr long VAL_INF = std::numeric_limits<long>::max() / 4;
inline constexpr long VAL_NEG_INF = -VAL_INF;

// Exponent of p in x; VAL_INF for x = 0.
long valuation(const Rat& x, long p);

// x / p^{v(x)}; requires x != 0.
Rat unit_part(const Rat& x, long p);

// Reduction of x modulo pk through the inverse of its denominator.
// Requires the denominator prime to pk.  Result in [0, pk).
Int mod_pk(const Rat& x, const Int& pk);

// Legendre symbol of the reduction of u (odd p, u a unit mod p).
int legendre(const Rat& u, long p);

// Smallest positive quadratic nonresidue mod the odd prime p.
long smallest_nonresidue(long p);

// True iff x is a nonzero square in Q_p.
bool is_square(const Rat& x, long p);

// Canonical representative of the square class of x != 0: u * p^{v mod 2}
// with u in {1, eps} for odd p, u in {1, -1, 5, -5} for p = 2.
Rat square_class(const Rat& x, long p);

// Exact square root over Q if one exists.
bool rational_sqrt(const Rat& x, Rat& out);

// A square root of a quadratic form discriminant, either exact (a rational
// whose square is the input) or a Hensel approximation correct modulo
// p^{v(x) + N}.  The sign is canonicalized: residue <= (p-1)/2 for odd p,
// congruent to 1 mod 4 for p = 2.
struct PadicApprox {
    Rat value;
    bool exact = false;
};

// Canonical square root (integer mod p^N) of a square unit u.
Int hensel_sqrt_unit(const Rat& u, long p, long N);

// Throws NotASquare when x is not a square in Q_p.
PadicApprox padic_sqrt(const Rat& x, long p, long N = 24);

// Hilbert symbol (a, b)_p in {+1, -1}.
int hilbert_symbol(const Rat& a, const Rat& b, long p);

// Measure of the symmetric multiplicative ball of radius exponent t, with
// the unit group normalized to measure 1: t + 1 for t >= 0, p^{t+1}/(p-1)
// below, 0 for the empty ball (t = VAL_NEG_INF).
Rat haar_ball_measure(long t, long p);

// Radius exponent of the smallest symmetric multiplicative ball containing
// all values; VAL_NEG_INF if every value is 1.  Values must be nonzero.
long smallest_symmetric_ball(const std::vector<Rat>& values, long p);

}  // namespace padisc

#endif
