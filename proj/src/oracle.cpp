#include "padisc/oracle.hpp"

#include <algorithm>
#include <set>

#include "padisc/errors.hpp"

namespace padisc {

std::vector<Vec3> sample_dual(long p, long depth) {
    if (depth < 1) throw DomainError("dual sample depth must be positive");
    std::vector<Vec3> pts;
    const Int pd = pow_int(p, depth);
    for (Int b = 0; b < pd; ++b) pts.push_back({rat(1), Rat(b), Rat(b * b)});
    for (Int a = 0; a < pd; a += p) pts.push_back({Rat(a * a), Rat(a), rat(1)});
    return pts;
}

Rat cross_ratio(const Vec3& phi_vec, const Vec3& phi2_vec, const Vec3& v,
                const Vec3& v2) {
    const Rat d1 = Bpolar(phi_vec, v), d2 = Bpolar(phi2_vec, v2);
    if (d1 == 0 || d2 == 0) throw ZeroDenominator();
    return Bpolar(phi_vec, v2) * Bpolar(phi2_vec, v) / (d1 * d2);
}

long oracle_t(const Vec3& v, const Vec3& w, long p,
              const std::vector<Vec3>& duals) {
    std::vector<Rat> rs;
    rs.reserve(duals.size());
    for (const Vec3& u : duals) {
        const Rat bv = Bpolar(u, v), bw = Bpolar(u, w);
        if (bv == 0 || bw == 0) throw ZeroDenominator();
        rs.push_back(bw / bv);
    }
    long lo = VAL_INF, hi = VAL_NEG_INF;
    for (const Rat& r : rs) {
        const long val = valuation(r, p);
        lo = std::min(lo, val);
        hi = std::max(hi, val);
    }
    if (hi > lo) return hi - lo;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    if (rs.size() == 1) return VAL_NEG_INF;
    long m = VAL_INF;
    for (size_t i = 0; i + 1 < rs.size(); ++i)
        m = std::min(m, valuation(rs[i + 1] - rs[i], p));
    return lo - m;
}

OracleDistance oracle_distance(const Vec3& v, const Vec3& w, const Rat& alpha,
                               long p, long start, long cap) {
    if (!in_disc(v, alpha, p) || !in_disc(w, alpha, p)) throw NotInDisc();
    bool have_prev = false;
    long prev_t = 0;
    for (long d = start; d <= cap; ++d) {
        const long t = oracle_t(v, w, p, sample_dual(p, d));
        if (have_prev && t == prev_t) return {trace_ball(t, alpha, p), d, true};
        prev_t = t;
        have_prev = true;
    }
    return {trace_ball(prev_t, alpha, p), cap, false};
}

bool oracle_in_dual_check(const Vec3& v, const Rat& alpha, long p, long depth) {
    for (const Vec3& u : sample_dual(p, depth)) {
        const Rat b = Bpolar(u, v);
        if (b == 0 || !in_K(b, alpha, p)) return false;
    }
    return true;
}

}  // namespace padisc
