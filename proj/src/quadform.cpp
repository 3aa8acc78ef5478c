#include "padisc/quadform.hpp"

#include "padisc/errors.hpp"

namespace padisc {

Rat Q(const Vec3& v) { return v[0] * v[2] - v[1] * v[1]; }

Rat Bpolar(const Vec3& v, const Vec3& w) {
    return v[0] * w[2] + w[0] * v[2] - 2 * v[1] * w[1];
}

Mat3 sym_square(const Mat2& g) {
    const Rat &a = g[0][0], &b = g[0][1], &c = g[1][0], &d = g[1][1];
    return {{{a * a, 2 * a * b, b * b},
             {a * c, a * d + b * c, b * d},
             {c * c, 2 * c * d, d * d}}};
}

Vec3 isom_action(const Mat2& g, const Vec3& v) {
    return mat3_vec(sym_square(g), v);
}

Mat3 adjoint(const Mat2& g) {
    const Rat d = det2(g);
    if (d == 0) throw DomainError("adjoint of a singular matrix");
    Mat3 m = sym_square(g);
    for (auto& row : m)
        for (auto& e : row) e /= d;
    return m;
}

Mat3 gram() {
    Mat3 g = mat3_id();
    g[0][0] = rat(0);
    g[0][2] = rat(1);
    g[1][1] = rat(-2);
    g[2][0] = rat(1);
    g[2][2] = rat(0);
    return g;
}

bool is_soq(const Mat3& m) {
    Mat3 mt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mt[i][j] = m[j][i];
    return mat3_mul(mt, mat3_mul(gram(), m)) == gram() && mat3_det(m) == 1;
}

Mat3 nplus3(const Rat& w) {
    Mat3 m = mat3_id();
    m[0][1] = 2 * w;
    m[0][2] = w * w;
    m[1][2] = w;
    return m;
}

Mat3 nminus3(const Rat& u) {
    Mat3 m = mat3_id();
    m[1][0] = u;
    m[2][0] = u * u;
    m[2][1] = 2 * u;
    return m;
}

Mat3 hdiag3(const Rat& x) {
    if (x == 0) throw DomainError("torus element needs a nonzero parameter");
    Mat3 m = mat3_id();
    m[0][0] = x;
    m[2][2] = 1 / x;
    return m;
}

Iwasawa iwasawa_decompose(const Mat3& m) {
    const Vec3 u = {m[0][0], m[1][0], m[2][0]};
    if (u[0] * u[2] != u[1] * u[1])
        throw DomainError("first column is not isotropic");
    if (u[0] == 0) throw ChartFailure("image of the base ray leaves the big cell");
    const Rat x = u[0];
    const Rat velo = u[1] / u[0];
    const Mat3 pre = mat3_mul(hdiag3(1 / x), nminus3(-velo));
    const Mat3 n = mat3_mul(pre, m);
    const Rat w = n[1][2];
    if (n != nplus3(w))
        throw DomainError("residual factor is not upper-unipotent");
    return {nminus3(velo), hdiag3(x), nplus3(w)};
}

std::optional<Rat> semicone_classify(const Vec3& v, long p) {
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw ZeroVector();
    if (Q(v) != 0) return std::nullopt;
    const Rat& c = v[0] != 0 ? v[0] : v[2];
    return square_class(c, p);
}

std::array<Vec3, 2> perp_basis(const Vec3& n) {
    const Rat &nx = n[0], &ny = n[1], &nz = n[2];
    // Bpolar(n, P) = nz*Px - 2*ny*Py + nx*Pz
    if (nz != 0) return {Vec3{2 * ny, nz, rat(0)}, Vec3{-nx, rat(0), nz}};
    if (nx != 0) return {Vec3{rat(1), rat(0), rat(0)}, Vec3{rat(0), nx, 2 * ny}};
    return {Vec3{rat(1), rat(0), rat(0)}, Vec3{rat(0), rat(0), rat(1)}};
}

Vec3 third_perp(const Vec3& base, const Vec3& d1) {
    const Vec3 r1 = {base[2], -2 * base[1], base[0]};
    const Vec3 r2 = {d1[2], -2 * d1[1], d1[0]};
    const Vec3 x = {r1[1] * r2[2] - r1[2] * r2[1],
                    r1[2] * r2[0] - r1[0] * r2[2],
                    r1[0] * r2[1] - r1[1] * r2[0]};
    if (x[0] == 0 && x[1] == 0 && x[2] == 0)
        throw DomainError("degenerate orthogonal direction");
    return x;
}

}  // namespace padisc
