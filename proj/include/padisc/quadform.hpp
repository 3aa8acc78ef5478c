#ifndef PADISC_QUADFORM_HPP
#define PADISC_QUADFORM_HPP

#include <optional>

#include "padisc/padic.hpp"
#include "padisc/rational.hpp"

namespace padisc {

// The ambient quadratic form Q(x, y, z) = xz - y^2 and its polarization
// B(v, w) = Q(v + w) - Q(v) - Q(w).
Rat Q(const Vec3& v);
Rat Bpolar(const Vec3& v, const Vec3& w);

// Conjugation action of GL2 on symmetric matrices written in coordinates:
// the degree-2 symmetric power of g, acting division-free so that
// Q(isom_action(g, v)) = det(g)^2 Q(v).
Mat3 sym_square(const Mat2& g);
Vec3 isom_action(const Mat2& g, const Vec3& v);

// sym_square(g) / det(g): the image of g in SO(Q); kernel = scalars.
Mat3 adjoint(const Mat2& g);

// Gram matrix of 2Q and the SO(Q) membership test.
Mat3 gram();
bool is_soq(const Mat3& m);

// One-parameter unipotent subgroups and the diagonal torus of SO(Q).
Mat3 nplus3(const Rat& w);
Mat3 nminus3(const Rat& u);
Mat3 hdiag3(const Rat& x);

// Triangular decomposition M = N^- H N^+ on the big cell; throws
// ChartFailure when the decomposition does not exist.
struct Iwasawa {
    Mat3 nminus;
    Mat3 h;
    Mat3 nplus;
};
Iwasawa iwasawa_decompose(const Mat3& m);

// Square class of the nonzero outer coordinate of an isotropic vector;
// nullopt when Q(v) != 0.  Throws ZeroVector on v = 0.
std::optional<Rat> semicone_classify(const Vec3& v, long p);

// Two independent solutions of Bpolar(n, .) = 0.
std::array<Vec3, 2> perp_basis(const Vec3& n);

// The direction orthogonal to both base and d1 (a B-cross-product).
Vec3 third_perp(const Vec3& base, const Vec3& d1);

}  // namespace padisc

#endif
