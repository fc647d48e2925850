#include "sclab/krylov.hpp"

namespace sclab {

KrylovTriple krylov(const Mat& A, const Vec& u, const Vec& v) {
  const int k = A.rows();
  if (A.cols() != k) fail(ErrKind::NotSquare, "krylov: A must be square");
  if (static_cast<int>(u.size()) != k || static_cast<int>(v.size()) != k)
    fail(ErrKind::DimensionMismatch, "krylov: vector length must equal the matrix size");

  std::vector<Vec> pu;  // u, Au, ..., A^{k-1}u
  pu.push_back(u);
  for (int i = 1; i < k; ++i) pu.push_back(matvec(A, pu.back()));

  std::vector<Vec> c1, c2;
  c1.push_back(v);
  c2.push_back(matvec(A, v));
  for (int i = 0; i + 1 < k; ++i) {
    c1.push_back(pu[i]);
    c2.push_back(pu[i]);
  }
  return KrylovTriple{Mat::from_columns(pu, A.ring()), Mat::from_columns(c1, A.ring()),
                      Mat::from_columns(c2, A.ring())};
}

Vec adjoint_last_row(const Mat& M) {
  const int k = M.rows();
  if (M.cols() != k) fail(ErrKind::NotSquare, "adjoint_last_row: matrix must be square");
  Vec w(k, Value::zero(M.ring()));
  for (int j = 1; j <= k; ++j) {
    // adj(M)_{k,j} is the (j,k) cofactor.
    Value c = M.minor_deleting({j}, {k}).det();
    w[j - 1] = ((j + k) % 2 == 0) ? c : -c;
  }
  return w;
}

Mat k_star(const Mat& A, const Vec& u, const Vec& v) {
  const int k = A.rows();
  KrylovTriple t = krylov(A, u, v);
  Vec row = adjoint_last_row(t.K1);
  Mat At = A.transpose();
  Mat S(k, k, A.ring());
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) S.at(i, j) = row[j - 1];
    if (i < k) row = matvec(At, row);  // row * A
  }
  return S;
}

}  // namespace sclab
