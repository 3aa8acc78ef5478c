#ifndef PADISC_ORACLE_HPP
#define PADISC_ORACLE_HPP

#include <vector>

#include "padisc/disc.hpp"

namespace padisc {

// Cone representatives (a^2, ab, b^2) for [a:b] over the standard
// two-chart cover of P^1 to the given residue depth; contains the two
// axis points (1,0,0), (0,0,1).
std::vector<Vec3> sample_dual(long p, long depth);

// Exact cross-ratio [phi, phi', v, v'] of the linear forms
// Bpolar(phi_vec, .), Bpolar(phi2_vec, .) evaluated at v, v'.
// Throws ZeroDenominator.
Rat cross_ratio(const Vec3& phi_vec, const Vec3& phi2_vec, const Vec3& v,
                const Vec3& v2);

// Radius exponent of the smallest symmetric ball containing all
// cross-ratios of dual pairs against (v, w); computed from the valuation
// spread of the single-form ratios.  VAL_NEG_INF when all ratios agree.
long oracle_t(const Vec3& v, const Vec3& w, long p,
              const std::vector<Vec3>& duals);

// Definition-level distance: measure of the smallest symmetric ball of
// dual cross-ratios, evaluated on deepening samples until the radius
// stabilizes.
struct OracleDistance {
    Rat value;
    long depth_used = 0;
    bool stable = false;
};
OracleDistance oracle_distance(const Vec3& v, const Vec3& w, const Rat& alpha,
                               long p, long start = 3, long cap = 8);

// Finite-depth necessity check of the duality description of membership:
// B(v, u) nonzero and in K_alpha for every sampled cone point u.
bool oracle_in_dual_check(const Vec3& v, const Rat& alpha, long p, long depth);

}  // namespace padisc

#endif
