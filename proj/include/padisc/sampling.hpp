#ifndef PADISC_SAMPLING_HPP
#define PADISC_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "padisc/disc.hpp"
#include "padisc/triangle.hpp"

namespace padisc {

// Seeded PRNG with portable integer draws (plain modular reduction, so a
// given seed produces the same stream on every platform).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [lo, hi], inclusive.
    long randint(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Uniform in [0, n).
    long randrange(long n) { return static_cast<long>(gen_() % static_cast<std::uint64_t>(n)); }

    bool coin() { return gen_() % 2 == 0; }

private:
    std::mt19937_64 gen_;
};

// Random rational with numerator in [-hi, hi] and denominator in [1, hi].
Rat rand_rat(Rng& rng, long hi = 9);
Rat rand_nonzero(Rng& rng, long hi = 9);

// Random invertible 2x2 matrix with rand_rat entries.
Mat2 rand_gl2(Rng& rng, long hi = 5);

// Random word of n elementary isometries (shears and diagonal scalings
// with p-power factors).
Mat2 rand_isom_word(Rng& rng, long p, int n = 2);

// Random element of K_alpha with a random valuation in {-1, 0, 1}.
Rat rand_K(Rng& rng, const Rat& alpha, long p);

// Random disc point: a scaled normal form (alpha s^2 lambda, 0, lambda)
// pushed by a random isometry word; membership holds by construction.
Vec3 rand_disc(Rng& rng, const Rat& alpha, long p, int spread = 1);

// Random pairs of distinct disc points mixing the long/short generation
// strategies (generic pairs, common normal frames, shear-close pairs,
// unit-multiplier pairs).
std::vector<std::pair<Vec3, Vec3>> gen_pairs(Rng& rng, const Rat& alpha,
                                             long p, int n);

// Random certified triangle point.
TrianglePoint rand_triangle(Rng& rng, long p);

}  // namespace padisc

#endif
