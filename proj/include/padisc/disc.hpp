#ifndef PADISC_DISC_HPP
#define PADISC_DISC_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "padisc/classgroups.hpp"
#include "padisc/quadform.hpp"

namespace padisc {

// Equality on the alpha-sphere: some coordinatewise ratio exists and lies
// in K_alpha.
bool sphere_eq(const Vec3& v, const Vec3& w, const Rat& alpha, long p);

// Plain projective equality (any nonzero ratio).
bool sphere_eq_proj(const Vec3& v, const Vec3& w);

// Disc membership: Q(v) in the class alpha and x in K_alpha.  The
// z-coordinate is then provably in K_alpha as well; asserted.
// Throws ZeroVector on v = 0.
bool in_disc(const Vec3& v, const Rat& alpha, long p);

// Rescale a projective representative into the disc if its projective
// class meets the disc; nullopt otherwise.  Membership on raw
// representatives is scale-dependent (x must lie in K_alpha); each
// projective class of the right Q-class contains exactly one qualifying
// K-scaling class because K_alpha has index 2.
std::optional<Vec3> disc_rep(const Vec3& v, const Rat& alpha, long p);

// Discriminant Bpolar(v,w)^2 - 4 Q(v) Q(w) of the pencil through v, w.
Rat line_disc(const Vec3& v, const Vec3& w);

enum class LineKind { Long, Short };

// Long iff the discriminant is a nonzero square (the plane's restricted
// form is isotropic).  Throws SamePoint when the discriminant vanishes.
LineKind classify_line(const Vec3& v, const Vec3& w, const Rat& alpha, long p);

// Cone endpoints of a long line, scaled so Bpolar(v, end) = 1, which pins
// the K_alpha class of the representative.  Exact iff the discriminant is
// a rational square.
struct BoundaryPair {
    std::array<Vec3, 2> ends;
    bool exact = false;
};
BoundaryPair long_boundary(const Vec3& v, const Vec3& w, const Rat& alpha,
                           long p, long N = 24);

// The exact projective invariant R = Bpolar(v,w)^2 / (4 Q(v) Q(w)).
Rat r_invariant(const Vec3& v, const Vec3& w);

// Multiplier pair {lambda, 1/lambda} of a long line together with the
// exact invariant R that reconstructs lambda + 1/lambda = 4R - 2.
struct MultDistance {
    Rat r;                        // exact invariant
    std::array<Rat, 2> lambda;    // the pair, possibly Hensel approximations
    bool exact = false;
};
MultDistance mult_distance(const Vec3& v, const Vec3& w, const Rat& alpha,
                           long p, long N = 24);

// Exact additive Hilbert distance for odd p.  Throws OddPrimeOnly at
// p = 2 and NotInDisc when a point fails membership.
Rat hilbert_distance(const Vec3& v, const Vec3& w, const Rat& alpha, long p);

// Shear g (exact) with isom_action(g, v/z) = (alpha', 0, 1) and
// alpha' = Q(v)/z^2 = alpha * s^2.
struct NormalForm {
    Mat2 g;
    Rat alpha_prime;
};
NormalForm reduce_to_normal_form(const Vec3& v, const Rat& alpha, long p);

// Membership of v in the circle of the given center and multiplier r,
// decided on the exact invariant R = (r + 2 + 1/r)/4.
bool circle_contains(const Vec3& center, const Rat& r, const Vec3& v,
                     const Rat& alpha, long p);

// Common points of two circles.  A point on both circles satisfies
// Bpolar(ci, P)^2 = 4 Q(ci) Ri Q(P), which forces (B1/B2)^2 = W =
// (Q1 R1)/(Q2 R2); candidates split into the branches B1 = +/- w B2, each
// a plane section of a conic with at most two solutions.  The full level
// sets can meet in four disc points (both branches realized); this returns
// a single branch, preferring exact rational solutions and then the +w
// branch -- a deterministic choice, covariant under rational isometries.
struct CircleIntersection {
    std::vector<Vec3> points;   // at most 2
    bool exact = false;
};
CircleIntersection circle_intersection(const Vec3& c1, const Rat& r1,
                                       const Vec3& c2, const Rat& r2,
                                       const Rat& alpha, long p, long N = 24);

// Exact census of ALL common points of two axis-centered circles
// (centers (A,0,1), (A',0,1)): returns the rational ones and the count
// including points whose y-coordinate is an irrational p-adic square root.
struct AxisCensus {
    std::vector<Vec3> rational_points;
    int count = 0;
};
AxisCensus axis_circle_solutions(const Vec3& c1, const Rat& r1,
                                 const Vec3& c2, const Rat& r2,
                                 const Rat& alpha, long p);

// Orthogonality of two directions in the polar plane of a base point.
// Throws NotInPerp if a direction is not B-orthogonal to the base.
bool orthogonal_lines(const Vec3& base, const Vec3& dir1, const Vec3& dir2,
                      const Rat& alpha, long p);

// hilbert_distance(v, w) <= 1.
bool same_ultrametric_locus(const Vec3& v, const Vec3& w, const Rat& alpha,
                            long p);

// Shape of the dual convex of the disc.
enum class DualKind { ConeOnly, ConeAndDisc };
DualKind dual_description(const Rat& alpha, long p);

// (d, e, exact) with d^2 + alpha e^2 = target; requires target in K_alpha.
struct NormFormSolution {
    Rat d;
    Rat e;
    bool exact = false;
};
NormFormSolution solve_norm_form(const Rat& target, const Rat& alpha, long p,
                                 long N = 20);

// Orbit label of a disc point under the index-2 isometry subgroup
// generated by square-determinant elements and K-scalings; always 0 when
// the disc is a single orbit (-1 not in K_alpha).
int orbit_label(const Vec3& v, const Rat& alpha, long p);

// Witness g with isom_action(g, v) = kappa * (alpha, 0, 1), kappa in
// K_alpha; nullopt when v lies in the other orbit.
struct OrbitWitness {
    Mat2 g;
    Rat kappa;
    bool exact = false;
};
std::optional<OrbitWitness> orbit_connect(const Vec3& v, const Rat& alpha,
                                          long p, long N = 20);

// Sheet of a point on the affine quadric {Q = beta}: 0 or 1; always 0
// when the quadric is connected.
int sheet_label(const Vec3& v, const Rat& beta, long p);

// SL2 element g (exact) with isom_action(g, v) = (X, 0, Z).
std::pair<Mat2, Vec3> sheet_reduce(const Vec3& v, const Rat& beta, long p);

// SL2 element g with isom_action(g, v) = w on {Q = beta}; requires equal
// sheet labels (asserted).  Possibly Hensel-approximate.
struct SheetConnection {
    Mat2 g;
    bool exact = false;
};
SheetConnection sheet_connect(const Vec3& v, const Vec3& w, const Rat& beta,
                              long p, long N = 20);

// Norm-one stabilizer element of [v_alpha] from the rational conic
// a = (1 - alpha t^2)/(1 + alpha t^2), c = 2t/(1 + alpha t^2), optionally
// composed with the mirror diag(1, -1).
Mat2 stab_family(const Rat& alpha, const Rat& t, bool mirror = false);

// Element with a^2 + alpha c^2 = -1 (exists iff -1 in K_alpha).
struct StabMinusOne {
    Mat2 g;
    bool exact = false;
};
StabMinusOne stab_minus_one(const Rat& alpha, long p, long N = 20);

// diag(alpha, 1) as the symmetric matrix of the base point, and the
// congruence action g S g^T used to verify stabilizer elements.
Mat2 base_sym(const Rat& alpha);
Mat2 sandwich(const Mat2& g, const Mat2& s);

}  // namespace padisc

#endif
