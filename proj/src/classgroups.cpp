#include "padisc/classgroups.hpp"

#include "padisc/errors.hpp"

namespace padisc {

std::vector<long> unit_class_reps(long p) {
    if (p == 2) return {1, 3, 5, 7};
    return {1, smallest_nonresidue(p)};
}

std::vector<Rat> all_square_classes(long p) {
    if (p == 2) {
        std::vector<Rat> out;
        for (long t : {1, 2})
            for (long s : {1, -1, 5, -5}) out.push_back(rat(s * t));
        return out;
    }
    const long e = smallest_nonresidue(p);
    return {rat(1), rat(e), rat(p), rat(e * p)};
}

std::vector<Rat> admissible_classes(long p) {
    std::vector<Rat> out;
    for (const Rat& c : all_square_classes(p))
        if (!is_square(-c, p)) out.push_back(c);
    return out;
}

bool in_K(const Rat& z, const Rat& alpha, long p) {
    return hilbert_symbol(-alpha, z, p) == 1;
}

bool minus_one_in_K(const Rat& alpha, long p) {
    return in_K(rat(-1), alpha, p);
}

int hyperboloid_sheets(const Rat& beta, long p) {
    return is_square(-beta, p) ? 1 : 2;
}

Rat mu_shell(long k, const Rat& alpha, long p) {
    const std::vector<long> reps = unit_class_reps(p);
    long cnt = 0;
    for (long c : reps)
        if (in_K(pow_rat(rat(p), k) * c, alpha, p)) ++cnt;
    return rat(cnt, static_cast<long>(reps.size()));
}

Rat trace_ball(long t, const Rat& alpha, long p) {
    if (t <= VAL_NEG_INF) return rat(0);
    if (t >= 0) {
        Rat s = 0;
        for (long k = -t; k <= t; ++k) s += mu_shell(k, alpha, p);
        return s;
    }
    const long m = -t;
    if (p != 2) return pow_rat(rat(p), t + 1) / (p - 1);
    if (m == 1) return trace_ball(0, alpha, p);
    if (m == 2) return rat(1, 4) * (1 + (in_K(rat(5), alpha, p) ? 1 : 0));
    return pow_rat(rat(2), t + 1);
}

std::string class_label(const Rat& cls, long p) {
    if (p == 2) return to_string(cls);
    const long v = ((valuation(cls, p) % 2) + 2) % 2;
    const bool residue = legendre(unit_part(cls, p), p) == 1;
    if (v == 0) return residue ? "1" : "eps";
    return residue ? "p" : "eps*p";
}

Rat parse_class_label(const std::string& label, long p) {
    if (p != 2) {
        const long e = smallest_nonresidue(p);
        if (label == "1") return rat(1);
        if (label == "eps") return rat(e);
        if (label == "p") return rat(p);
        if (label == "eps*p" || label == "epsp") return rat(e * p);
    }
    Rat x;
    try {
        x = parse_rat(label);
    } catch (const UsageError&) {
        throw UsageError("unknown square-class label: '" + label + "'");
    }
    if (x == 0) throw UsageError("zero is not a square class");
    return square_class(x, p);
}

}  // namespace padisc
