/// @file krylov.hpp
/// @brief Krylov column matrices and the adjugate-row companion matrix.
///
/// For a k x k matrix A and vectors u, v:
///   K  = [u, Au, ..., A^{k-1}u]
///   K1 = [v, u, Au, ..., A^{k-2}u]
///   K2 = [Av, u, Au, ..., A^{k-2}u]
///   K* = rows w, wA, ..., wA^{k-1}, where w is the last row of adj(K1).
/// The adjugate row is well defined even when K1 is singular.
#pragma once

#include "sclab/matrix.hpp"

namespace sclab {

struct KrylovTriple {
  Mat K, K1, K2;
};

KrylovTriple krylov(const Mat& A, const Vec& u, const Vec& v);

/// Last row w of the classical adjoint: w satisfies w * M = det(M) * e_k^T.
Vec adjoint_last_row(const Mat& M);

Mat k_star(const Mat& A, const Vec& u, const Vec& v);

}  // namespace sclab
