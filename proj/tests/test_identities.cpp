#include <doctest.h>

#include <functional>

#include "sclab/identities.hpp"
#include "sclab/krylov.hpp"
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

Mat random_invertible(int n, const RingSpec& ring, std::mt19937_64& g) {
  for (;;) {
    Mat A = random_mat(n, n, ring, g);
    if (!A.det().is_zero()) return A;
  }
}

/// Shared mutable variable table for building fully generic symbolic inputs.
struct SymCtx {
  std::shared_ptr<VarTable> vt = std::make_shared<VarTable>();
  RingSpec ring() const { return RingSpec::symbolic(vt); }
  Value var(const std::string& name) {
    VarIdx v = vt->contains(name) ? vt->require(name) : vt->add(name);
    return Value(Poly::variable(v));
  }
  Mat generic(int n, int m, const std::string& prefix) {
    Mat M(n, m, ring());
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j)
        M.at(i, j) = var(prefix + std::to_string(i) + std::to_string(j));
    }
    return M;
  }
};

bool throws_kind(const std::function<void()>& f, ErrKind k) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  } catch (...) {
  }
  return false;
}

}  // namespace

TEST_CASE("desnanot-jacobi residual vanishes") {
  RingSpec fp = RingSpec::prime_field();
  CHECK(desnanot_jacobi_residual(Mat::identity(3, RingSpec::rational()), 1, 2, 1, 2).is_zero());

  auto g = rng_for_trial(501, 0);
  for (int trial = 0; trial < 20; ++trial) {
    Mat A = random_mat(5, 5, fp, g);
    int a = 1 + static_cast<int>(uniform_below(g, 5));
    int b = 1 + static_cast<int>(uniform_below(g, 5));
    while (b == a) b = 1 + static_cast<int>(uniform_below(g, 5));
    int c = 1 + static_cast<int>(uniform_below(g, 5));
    int d = 1 + static_cast<int>(uniform_below(g, 5));
    while (d == c) d = 1 + static_cast<int>(uniform_below(g, 5));
    CHECK(desnanot_jacobi_residual(A, a, b, c, d).is_zero());
  }

  // Singular input: duplicate a row; the identity still holds.
  Mat S = random_mat(4, 4, fp, g);
  for (int j = 1; j <= 4; ++j) S.at(3, j) = S.at(1, j);
  CHECK(desnanot_jacobi_residual(S, 2, 4, 1, 3).is_zero());

  SymCtx cx;
  CHECK(desnanot_jacobi_residual(cx.generic(3, 3, "a"), 1, 3, 2, 3).is_zero());
  CHECK(desnanot_jacobi_residual(cx.generic(4, 4, "b"), 3, 1, 4, 2).is_zero());  // unsorted pairs

  Mat I4 = Mat::identity(4, RingSpec::rational());
  CHECK(throws_kind([&] { (void)desnanot_jacobi_residual(I4, 2, 2, 1, 3); }, ErrKind::IndexInvalid));
  CHECK(throws_kind([&] { (void)desnanot_jacobi_residual(I4, 1, 5, 1, 3); }, ErrKind::IndexInvalid));
}

TEST_CASE("short pluecker residual vanishes") {
  SymCtx cx;
  Mat B2 = cx.generic(2, 3, "p");
  // All column triples in every order, both row choices.
  for (int d = 1; d <= 2; ++d) {
    CHECK(plucker_residual(B2, 1, 2, 3, d).is_zero());
    CHECK(plucker_residual(B2, 3, 1, 2, d).is_zero());
    CHECK(plucker_residual(B2, 2, 3, 1, d).is_zero());
  }

  RingSpec fp = RingSpec::prime_field();
  auto g = rng_for_trial(502, 0);
  for (int trial = 0; trial < 20; ++trial) {
    Mat B = random_mat(4, 5, fp, g);
    int cols[3];
    cols[0] = 1 + static_cast<int>(uniform_below(g, 5));
    do cols[1] = 1 + static_cast<int>(uniform_below(g, 5));
    while (cols[1] == cols[0]);
    do cols[2] = 1 + static_cast<int>(uniform_below(g, 5));
    while (cols[2] == cols[0] || cols[2] == cols[1]);
    int d = 1 + static_cast<int>(uniform_below(g, 4));
    CHECK(plucker_residual(B, cols[0], cols[1], cols[2], d).is_zero());
  }

  Mat Z = random_mat(3, 4, fp, g);
  for (int j = 1; j <= 4; ++j) Z.at(2, j) = Value::zero(fp);
  CHECK(plucker_residual(Z, 1, 2, 4, 1).is_zero());

  CHECK(throws_kind([&] { (void)plucker_residual(Z, 1, 1, 2, 1); }, ErrKind::IndexInvalid));
  CHECK(throws_kind([&] { (void)plucker_residual(Z, 1, 2, 3, 4); }, ErrKind::IndexInvalid));
  CHECK(throws_kind([&] { (void)plucker_residual(random_mat(3, 3, fp, g), 1, 2, 3, 1); },
                    ErrKind::DimensionMismatch));
}

TEST_CASE("pluecker corollary with the fixed index pattern") {
  // The symbolic m = 3 instance pins down the index interpretation exactly.
  SymCtx cx;
  CHECK(pluckpluck_residual(cx.generic(3, 4, "b")).is_zero());
  CHECK(pluckpluck_residual(cx.generic(4, 5, "c")).is_zero());

  RingSpec fp = RingSpec::prime_field();
  auto g = rng_for_trial(503, 0);
  for (int m : {5, 6}) {
    for (int trial = 0; trial < 10; ++trial)
      CHECK(pluckpluck_residual(random_mat(m, m + 1, fp, g)).is_zero());
  }

  Mat I30(3, 4, RingSpec::rational());
  for (int i = 1; i <= 3; ++i) I30.at(i, i) = Value::one(RingSpec::rational());
  CHECK(pluckpluck_residual(I30).is_zero());

  CHECK(throws_kind([&] { (void)pluckpluck_residual(random_mat(2, 3, fp, g)); },
                    ErrKind::DimensionMismatch));
}

TEST_CASE("krylov matrices and the adjugate row") {
  RingSpec fp = RingSpec::prime_field();
  RingSpec qq = RingSpec::rational();
  auto g = rng_for_trial(504, 0);

  // Stationary A collapses K to repeated columns.
  Vec u3 = unit_vec(3, 2, qq);
  CHECK(krylov(Mat::identity(3, qq), u3, u3).K.det().is_zero());

  KrylovTriple t2 = krylov(Mat::identity(2, qq), unit_vec(2, 1, qq), unit_vec(2, 2, qq));
  CHECK(t2.K1.det() == Value::integer(-1, qq));

  Mat A = random_mat(4, 4, fp, g);
  Vec u = random_mat(4, 1, fp, g).col(1);
  Vec v = random_mat(4, 1, fp, g).col(1);
  KrylovTriple t = krylov(A, u, v);
  Vec au = matvec(A, u), aau = matvec(A, au), aaau = matvec(A, aau);
  CHECK(t.K == Mat::from_columns({u, au, aau, aaau}, fp));
  CHECK(t.K1 == Mat::from_columns({v, u, au, aau}, fp));
  CHECK(t.K2 == Mat::from_columns({matvec(A, v), u, au, aau}, fp));

  // 2x2 adjugate row in closed form.
  SymCtx cx;
  Mat M2(2, 2, cx.ring());
  M2.at(1, 1) = cx.var("m11"), M2.at(1, 2) = cx.var("m12");
  M2.at(2, 1) = cx.var("m21"), M2.at(2, 2) = cx.var("m22");
  Vec w2 = adjoint_last_row(M2);
  CHECK(w2[0] == -cx.var("m21"));
  CHECK(w2[1] == cx.var("m11"));

  // K1 of the k = 2 shift data: columns [Ue2, e1].
  Mat MU(2, 2, cx.ring());
  MU.at(1, 1) = cx.var("u12"), MU.at(1, 2) = Value::one(cx.ring());
  MU.at(2, 1) = cx.var("u22");
  Vec wu = adjoint_last_row(MU);
  CHECK(wu[0] == -cx.var("u22"));
  CHECK(wu[1] == cx.var("u12"));

  // w * M = det(M) e_k^T, including singular M.
  for (bool make_singular : {false, true}) {
    Mat M = random_mat(4, 4, fp, g);
    if (make_singular) {
      for (int j = 1; j <= 4; ++j) M.at(4, j) = M.at(2, j);
    }
    Vec w = adjoint_last_row(M);
    Vec prod = matvec(M.transpose(), w);
    Value d = M.det();
    for (int j = 1; j <= 4; ++j) {
      CHECK(prod[j - 1] == (j == 4 ? d : Value::zero(fp)));
    }
  }

  // K* rows against independent w A^i products.
  Mat A3 = random_mat(3, 3, fp, g);
  Vec u3f = random_mat(3, 1, fp, g).col(1);
  Vec v3f = random_mat(3, 1, fp, g).col(1);
  Mat S = k_star(A3, u3f, v3f);
  Vec w = adjoint_last_row(krylov(A3, u3f, v3f).K1);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(S.at(i, j) == w[j - 1]);
    w = matvec(A3.transpose(), w);
  }

  // det K*(U^{-1}; e1, U e2) = -u12 for 2x2 U.
  Mat U = random_invertible(2, fp, g);
  Vec vg = matvec(U, unit_vec(2, 2, fp));
  CHECK(k_star(U.inverse(), unit_vec(2, 1, fp), vg).det() == -U.at(1, 2));
}

TEST_CASE("krylov long identity") {
  RingSpec qq = RingSpec::rational();
  RingSpec fp = RingSpec::prime_field();
  CHECK(long_identity_residual(Mat::identity(2, qq), unit_vec(2, 1, qq), unit_vec(2, 2, qq))
            .is_zero());

  auto g = rng_for_trial(505, 0);
  for (int k = 2; k <= 5; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      Mat A = random_mat(k, k, fp, g);
      Vec u = random_mat(k, 1, fp, g).col(1);
      Vec v = random_mat(k, 1, fp, g).col(1);
      CHECK(long_identity_residual(A, u, v).is_zero());
    }
  }

  // Rational points exercise the Bareiss determinant path.
  Mat Aq = random_mat(3, 3, qq, g);
  CHECK(long_identity_residual(Aq, random_mat(3, 1, qq, g).col(1), random_mat(3, 1, qq, g).col(1))
            .is_zero());

  SymCtx cx;
  Mat A2 = cx.generic(2, 2, "a");
  Vec u2{cx.var("u1"), cx.var("u2")};
  Vec v2{cx.var("v1"), cx.var("v2")};
  CHECK(long_identity_residual(A2, u2, v2).is_zero());

  SymCtx cy;
  Mat A3 = cy.generic(3, 3, "a");
  Vec u3{cy.var("u1"), cy.var("u2"), cy.var("u3")};
  Vec v3{cy.var("v1"), cy.var("v2"), cy.var("v3")};
  CHECK(long_identity_residual(A3, u3, v3).is_zero());

  CHECK(throws_kind(
      [&] {
        (void)long_identity_residual(Mat::identity(1, qq), unit_vec(1, 1, qq), unit_vec(1, 1, qq));
      },
      ErrKind::DimensionMismatch));
}

TEST_CASE("exact univariate interpolation") {
  RingSpec qq = RingSpec::rational();
  RingSpec fp = RingSpec::prime_field();

  for (const RingSpec& ring : {qq, fp}) {
    std::vector<Value> target{Value::integer(3, ring), Value::integer(0, ring),
                              Value::integer(-2, ring), Value::integer(5, ring)};
    std::vector<Value> xs, ys;
    for (int t = 0; t < 4; ++t) {
      Value x = Value::integer(t, ring);
      Value y = Value::zero(ring);
      Value p = Value::one(ring);
      for (const Value& c : target) {
        y = y + c * p;
        p = p * x;
      }
      xs.push_back(x);
      ys.push_back(y);
    }
    auto coeffs = interpolate_univariate(xs, ys, ring);
    CHECK(coeffs == target);
    CHECK(coeffs_degree(coeffs) == 3);
  }

  // Polynomial-valued samples: f(t) = (x + t)(y - 2t) coefficientwise.
  SymCtx cx;
  RingSpec sym = cx.ring();
  Value x = cx.var("x"), y = cx.var("y");
  std::vector<Value> xs, ys;
  for (int t = 0; t < 3; ++t) {
    Value tv = Value::integer(t, sym);
    xs.push_back(tv);
    ys.push_back((x + tv) * (y - Value::integer(2, sym) * tv));
  }
  auto coeffs = interpolate_univariate(xs, ys, sym);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0] == x * y);
  CHECK(coeffs[1] == y - Value::integer(2, sym) * x);
  CHECK(coeffs[2] == Value::integer(-2, sym));

  auto zc = interpolate_univariate({Value::integer(0, qq), Value::integer(1, qq)},
                                   {Value::zero(qq), Value::zero(qq)}, qq);
  CHECK(coeffs_degree(zc) == -1);
  CHECK(throws_kind([&] { (void)interpolate_univariate(xs, {x}, sym); },
                    ErrKind::DimensionMismatch));
}

TEST_CASE("diagonalizable degeneracy witness") {
  auto g = rng_for_trial(506, 0);
  RingSpec qq = RingSpec::rational();

  std::vector<Value> gammas{Value::integer(0, qq), Value::integer(1, qq),
                            Value(Rat(-3, 2))};
  for (int k : {2, 3, 4}) {
    for (const Value& gamma : gammas) {
      Mat A = gencop_witness(k, gamma, g, true);
      REQUIRE(A.rows() == k);
      CHECK(!A.det().is_zero());
      Vec e1 = unit_vec(k, 1, qq);
      CHECK(krylov(A, e1, e1).K.det().is_zero());
      Vec vg = matvec(A.inverse(), vec_add(unit_vec(k, 2, qq), vec_scale(gamma, e1)));
      CHECK(!k_star(A, e1, vg).det().is_zero());
      for (int m = 1; m <= k; ++m) CHECK(!A.window(1, m, 1, m).det().is_zero());
    }
  }

  // Relaxed mode still satisfies the two determinant conditions.
  Mat A = gencop_witness(3, Value::integer(2, qq), g, false);
  Vec e1 = unit_vec(3, 1, qq);
  CHECK(krylov(A, e1, e1).K.det().is_zero());
  CHECK(!k_star(A, e1, matvec(A.inverse(), vec_add(unit_vec(3, 2, qq),
                                                   vec_scale(Value::integer(2, qq), e1))))
             .det()
             .is_zero());

  CHECK(throws_kind([&] { (void)gencop_witness(1, Value::integer(0, qq), g, true); },
                    ErrKind::DimensionMismatch));
}

TEST_CASE("theta perturbation harness") {
  RingSpec fp = RingSpec::prime_field();
  auto g = rng_for_trial(507, 0);

  Mat base = random_mat(5, 6, fp, g);
  PerturbationSpec spec;
  spec.name = "generic 5x6";
  spec.theta_cells = {{3, 2}};
  spec.rlo = 1, spec.rhi = 5, spec.clo = 1, spec.chi = 6;
  spec.degree_bound = 3;
  spec.coeff_index = 1;
  IdentityReport rep = theta_exchange_check(base, spec);
  CHECK(rep.pass);
  CHECK(rep.residual.is_zero());

  ThetaOutcome out = theta_sides(base, spec);
  CHECK(out.residual_zero);
  CHECK(out.lhs_degree >= 1);  // generic data genuinely depends on theta
  CHECK(out.lhs_degree <= 3);
  CHECK(out.residual_degree == -1);
  CHECK(out.coeff_residual.is_zero());

  // The degree gate binds the residual, not the sides: even a bound of zero
  // passes because the two sides agree coefficient by coefficient.
  spec.degree_bound = 0;
  IdentityReport tight = theta_exchange_check(base, spec);
  CHECK(tight.pass);
  CHECK(tight.residual.is_zero());
  CHECK(tight.instance.find("residual degree -1") != std::string::npos);

  // Two cells, symbolic base: coefficients are polynomials.
  SymCtx cx;
  Mat symbase = cx.generic(4, 5, "s");
  PerturbationSpec sym;
  sym.name = "generic symbolic 4x5";
  sym.theta_cells = {{2, 3}, {4, 1}};
  sym.rlo = 1, sym.rhi = 4, sym.clo = 1, sym.chi = 5;
  sym.degree_bound = 6;
  sym.coeff_index = 2;
  IdentityReport srep = theta_exchange_check(symbase, sym);
  CHECK(srep.pass);
  CHECK(srep.residual.is_zero());
}
