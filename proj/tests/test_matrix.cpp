#include <doctest.h>

#include "sclab/jsonio.hpp"
#include "sclab/matrix.hpp"
#include "sclab/rng.hpp"

using namespace sclab;

namespace {

Mat random_mat(int n, int m, const RingSpec& ring, std::mt19937_64& g) {
  Mat A(n, m, ring);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) A.at(i, j) = random_field_value(ring, g);
  }
  return A;
}

// Independent oracle: Laplace expansion along a chosen row.
Value det_along_row(const Mat& M, int row) {
  int n = M.rows();
  if (n == 1) return M.at(1, 1);
  Value acc = Value::zero(M.ring());
  for (int j = 1; j <= n; ++j) {
    const Value& a = M.at(row, j);
    if (a.is_zero()) continue;
    Value sub = det_along_row(M.minor_deleting({row}, {j}), 1);
    Value t = a * sub;
    acc = ((row + j) % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

}  // namespace

TEST_CASE("submatrix calculus") {
  RingSpec ring = RingSpec::rational();
  Mat I = Mat::identity(3, ring);
  CHECK(I.submatrix({2, 3}, {2, 3}) == Mat::identity(2, ring));
  CHECK(I.submatrix({1, 2, 3}, {1, 2, 3}) == I);
  CHECK(I.window(1, 3, 1, 3) == I);
  CHECK(I.minor_deleting({1}, {1}) == Mat::identity(2, ring));
  CHECK_THROWS_AS((void)I.submatrix({2, 2}, {1}), Error);
  CHECK_THROWS_AS((void)I.submatrix({4}, {1}), Error);
  // Empty selections are legal and det(0x0) = 1.
  Mat empty = I.submatrix({}, {});
  CHECK(empty.rows() == 0);
  CHECK(empty.det() == Value::one(ring));
}

TEST_CASE("determinant basics and oracles") {
  RingSpec fp = RingSpec::prime_field();
  CHECK(Mat::identity(5, fp).det() == Value::one(fp));
  Mat Z(3, 3, fp);
  Z.at(1, 1) = Value::integer(4, fp);
  Z.at(1, 2) = Value::integer(2, fp);
  Z.at(3, 3) = Value::integer(9, fp);
  CHECK(Z.det().is_zero());  // zero middle row

  auto g = rng_for_trial(2024, 1);
  for (int t = 0; t < 12; ++t) {
    Mat A = random_mat(4, 4, RingSpec::rational(), g);
    Value d = A.det();
    CHECK(d == A.det(DetAlgo::Cofactor));
    CHECK(d == A.det(DetAlgo::LaplaceMemo));
    CHECK(d == A.det(DetAlgo::Gauss));
    CHECK(d == A.transpose().det());
    for (int r = 1; r <= 4; ++r) CHECK(d == det_along_row(A, r));
  }
  for (int t = 0; t < 10; ++t) {
    Mat A = random_mat(5, 5, fp, g), B = random_mat(5, 5, fp, g);
    CHECK((A * B).det() == A.det() * B.det());
  }
}

TEST_CASE("fraction-free elimination over polynomials matches cofactor expansion") {
  auto vt = std::make_shared<VarTable>();
  for (int i = 0; i < 16; ++i) vt->add("m" + std::to_string(i));
  RingSpec sym = RingSpec::symbolic(vt);
  for (int n = 2; n <= 4; ++n) {
    Mat A(n, n, sym);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) A.at(i, j) = Value(Poly::variable(static_cast<VarIdx>((i - 1) * 4 + (j - 1))));
    }
    Value d = A.det(DetAlgo::Bareiss);
    CHECK(d == A.det(DetAlgo::Cofactor));
    CHECK(d == A.det(DetAlgo::LaplaceMemo));
    if (n == 3) CHECK(d.as_poly().nterms() == 6);
  }
  // Bareiss with a zero leading pivot exercises the row-swap path.
  Mat B(3, 3, sym);
  B.at(1, 2) = Value(Poly::variable(0));
  B.at(2, 1) = Value(Poly::variable(1));
  B.at(3, 3) = Value(Poly::variable(2));
  CHECK(B.det(DetAlgo::Bareiss) == B.det(DetAlgo::Cofactor));
}

TEST_CASE("inverse and adjugate") {
  auto g = rng_for_trial(7, 0);
  RingSpec fp = RingSpec::prime_field();
  for (int t = 0; t < 8; ++t) {
    Mat A = random_mat(5, 5, fp, g);
    if (A.det().is_zero()) continue;
    CHECK(A * A.inverse() == Mat::identity(5, fp));
  }
  Mat D(2, 2, RingSpec::rational());
  D.at(1, 1) = Value(Rat(2));
  D.at(2, 2) = Value(Rat(4));
  Mat Di = D.inverse();
  CHECK(Di.at(1, 1) == Value(Rat(1, 2)));
  CHECK(Di.at(2, 2) == Value(Rat(1, 4)));

  // adj(M) * M = det(M) * I, including singular M.
  for (int t = 0; t < 6; ++t) {
    Mat A = random_mat(4, 4, RingSpec::rational(), g);
    if (t % 2 == 0) {
      for (int j = 1; j <= 4; ++j) A.at(2, j) = A.at(3, j);  // force singularity
    }
    Mat prod = A.adjugate() * A;
    CHECK(prod == Mat::identity(4, RingSpec::rational()).scalar_mul(A.det()));
  }
  CHECK_THROWS_AS((void)Mat(2, 2, fp).inverse(), Error);
}

TEST_CASE("matrix ring operations") {
  auto g = rng_for_trial(99, 5);
  RingSpec fp = RingSpec::prime_field();
  Mat A = random_mat(3, 3, fp, g), B = random_mat(3, 3, fp, g), C = random_mat(3, 3, fp, g);
  CHECK(A * Mat::identity(3, fp) == A);
  CHECK((A + B) - B == A);
  CHECK((A * B) * C == A * (B * C));
  CHECK_THROWS_AS((void)(A * Mat(4, 3, fp)), Error);
  Vec v = {Value::integer(1, fp), Value::integer(2, fp), Value::integer(3, fp)};
  Vec Av = matvec(A, v);
  Mat Vm = Mat::from_columns({v}, fp);
  CHECK(Mat::from_columns({Av}, fp) == A * Vm);
}

TEST_CASE("matrix json round trip in all rings") {
  auto g = rng_for_trial(3, 3);
  for (RingSpec ring : {RingSpec::rational(), RingSpec::prime_field()}) {
    Mat A = random_mat(3, 4, ring, g);
    Mat back = matrix_from_json(matrix_to_json(A));
    CHECK(back == A);
    CHECK(back.ring().compatible(A.ring()));
  }
  auto vt = std::make_shared<VarTable>();
  vt->add("x");
  vt->add("y");
  RingSpec sym = RingSpec::symbolic(vt);
  Mat S(2, 2, sym);
  S.at(1, 1) = Value(Poly::variable(0) * Poly::variable(1) + Poly::constant(2));
  S.at(2, 1) = Value(Poly::variable(1).pow(3).mul_scalar(Rat(-1, 3)));
  Mat back = matrix_from_json(matrix_to_json(S));
  CHECK(back == S);
}
