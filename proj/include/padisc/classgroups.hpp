#ifndef PADISC_CLASSGROUPS_HPP
#define PADISC_CLASSGROUPS_HPP

#include <string>
#include <vector>

#include "padisc/padic.hpp"

namespace padisc {

// Representatives of the unit square classes: {1, eps} for odd p,
// {1, 3, 5, 7} for p = 2.
std::vector<long> unit_class_reps(long p);

// All square classes of Q_p^*: 4 for odd p, 8 for p = 2.
std::vector<Rat> all_square_classes(long p);

// Classes alpha with -alpha a nonsquare; each indexes one disc.
std::vector<Rat> admissible_classes(long p);

// Membership in the index-2 norm subgroup K_alpha = {alpha x^2 + y^2}.
bool in_K(const Rat& z, const Rat& alpha, long p);

bool minus_one_in_K(const Rat& alpha, long p);

// Number of connected components of {Q = beta, z != 0}: 1 when -beta is a
// square, else 2.
int hyperboloid_sheets(const Rat& beta, long p);

// Measure of the K_alpha part of the valuation-k shell (unit group = 1).
Rat mu_shell(long k, const Rat& alpha, long p);

// Measure of (symmetric ball of radius p^t) intersected with K_alpha.
Rat trace_ball(long t, const Rat& alpha, long p);

// Human-readable class labels for the CLI ("1", "eps", "p", "eps*p" for
// odd p; signed representatives for p = 2) and their parser.
std::string class_label(const Rat& cls, long p);
Rat parse_class_label(const std::string& label, long p);

}  // namespace padisc

#endif
