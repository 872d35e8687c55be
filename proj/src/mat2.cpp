#include "matdyn/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace matdyn {

Mat2 mat_identity() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 mat_zero() { return {0.0, 0.0, 0.0, 0.0}; }
Mat2 mat_diag(cplx a, cplx d) { return {a, 0.0, 0.0, d}; }

Mat2 mat_add(const Mat2& a, const Mat2& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t};
}

Mat2 mat_sub(const Mat2& a, const Mat2& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z, a.t - b.t};
}

Mat2 mat_scale(cplx s, const Mat2& m) {
    return {s * m.x, s * m.y, s * m.z, s * m.t};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a.x * b.x + a.y * b.z,
            a.x * b.y + a.y * b.t,
            a.z * b.x + a.t * b.z,
            a.z * b.y + a.t * b.t};
}

Mat2 mat_inverse(const Mat2& m) {
    const cplx d = m.x * m.t - m.y * m.z;
    if (std::abs(d) <= kSingularTol)
        throw SingularMatrix("mat_inverse: |det| below singular tolerance");
    return {m.t / d, -m.y / d, -m.z / d, m.x / d};
}

double sup_norm(const Mat2& m) {
    return std::max(std::max(std::abs(m.x), std::abs(m.y)),
                    std::max(std::abs(m.z), std::abs(m.t)));
}

bool mat_finite(const Mat2& m) {
    return std::isfinite(m.x.real()) && std::isfinite(m.x.imag()) &&
           std::isfinite(m.y.real()) && std::isfinite(m.y.imag()) &&
           std::isfinite(m.z.real()) && std::isfinite(m.z.imag()) &&
           std::isfinite(m.t.real()) && std::isfinite(m.t.imag());
}

Invariants invariants(const Mat2& m) {
    return {m.x + m.t, m.x * m.t - m.y * m.z};
}

EigenPair eigenvalues(const Mat2& m) {
    // discriminant (tr)^2 - 4 det = (t - x)^2 + 4yz
    const cplx delta = std::sqrt((m.t - m.x) * (m.t - m.x) + 4.0 * m.y * m.z);
    const cplx s = m.t + m.x;
    cplx l1 = (s + delta) / 2.0;
    cplx l2 = (s - delta) / 2.0;
    if (l2.real() < l1.real() ||
        (l2.real() == l1.real() && l2.imag() < l1.imag()))
        std::swap(l1, l2);
    const bool rep = std::abs(delta) <= kRepeatedEigTol * (1.0 + sup_norm(m));
    return {l1, l2, rep};
}

Mat2 conjugate(const Mat2& p, const Mat2& m) {
    return mat_mul(mat_mul(p, m), mat_inverse(p));
}

JordanClass jordan_classify(const Mat2& m) {
    const double tol = 1e-10;
    if (std::abs(m.y) <= tol && std::abs(m.z) <= tol && std::abs(m.x - m.t) <= tol)
        return JordanClass::ScalarMultipleOfId;
    const cplx disc = (m.t - m.x) * (m.t - m.x) + 4.0 * m.y * m.z;
    const double n = sup_norm(m);
    if (std::abs(disc) <= tol * (1.0 + n * n))
        return JordanClass::NonDiagonalizable;
    return JordanClass::DiagonalizableDistinct;
}

} // namespace matdyn
