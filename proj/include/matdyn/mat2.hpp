#pragma once

#include <complex>

#include "matdyn/errors.hpp"

namespace matdyn {

using cplx = std::complex<double>;

// Entries of [[x, y], [z, t]].
struct Mat2 {
    cplx x, y, z, t;
};

// Similarity invariants (tr M, det M).
struct Invariants {
    cplx trace, det;
};

// Roots of s^2 - (tr)s + det, ordered lexicographically by (re, im) ascending.
struct EigenPair {
    cplx l1, l2;
    bool repeated;
};

enum class JordanClass {
    ScalarMultipleOfId,
    DiagonalizableDistinct,
    NonDiagonalizable,
};

inline constexpr double kSingularTol = 1e-300;
inline constexpr double kRepeatedEigTol = 1e-10;

Mat2 mat_identity();
Mat2 mat_zero();
Mat2 mat_diag(cplx a, cplx d);

Mat2 mat_add(const Mat2& a, const Mat2& b);
Mat2 mat_sub(const Mat2& a, const Mat2& b);
Mat2 mat_scale(cplx s, const Mat2& m);
Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_inverse(const Mat2& m);

double sup_norm(const Mat2& m);
bool mat_finite(const Mat2& m);

Invariants invariants(const Mat2& m);
EigenPair eigenvalues(const Mat2& m);
Mat2 conjugate(const Mat2& p, const Mat2& m);
JordanClass jordan_classify(const Mat2& m);

} // namespace matdyn
