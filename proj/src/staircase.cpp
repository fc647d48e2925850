/// @file staircase.cpp
/// @brief Staircase pairs, core minors, pencil coefficients, main identity.

#include "sclab/staircase.hpp"

#include <sstream>

#include "sclab/jsonio.hpp"
#include "sclab/krylov.hpp"

namespace sclab {

namespace {

Value parity_sign(long e, const RingSpec& ring) {
  return (e % 2 == 0) ? Value::one(ring) : Value::integer(-1, ring);
}

std::string type_str(const StaircaseData& S) {
  std::ostringstream os;
  os << "n=" << S.n << " a=" << S.a << " b=" << S.b << " over " << S.ring().kind_name();
  return os.str();
}

void require_field(const RingSpec& ring, const char* op) {
  if (ring.kind == RingKind::Symbolic)
    fail(ErrKind::RingMismatch, std::string(op) + " requires a field ring");
}

/// out[j] = M^j v for j = 0..maxpow.
std::vector<Vec> power_chain(const Mat& M, Vec v, int maxpow) {
  std::vector<Vec> out;
  out.push_back(v);
  for (int j = 1; j <= maxpow; ++j) {
    v = matvec(M, v);
    out.push_back(v);
  }
  return out;
}

}  // namespace

namespace {

void check_type_params(int n, int a, int b) {
  if (b < 0 || a > n || a <= b + 1)
    fail(ErrKind::ShapeViolation, "need 0 <= b, b + 2 <= a <= n");
}

}  // namespace

StaircaseData validate_shape(int n, int a, int b, Mat X, Mat Y) {
  check_type_params(n, a, b);
  if (X.rows() != n || X.cols() != n || Y.rows() != n || Y.cols() != n)
    fail(ErrKind::ShapeViolation, "X and Y must be n x n");
  if (!X.ring().compatible(Y.ring()))
    fail(ErrKind::RingMismatch, "X and Y live in different rings");
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      if (!X.at(i, j).is_zero())
        fail(ErrKind::ShapeViolation, "X rows 1..a, columns 1..b must vanish");
  for (int i = a + 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!X.at(i, j).is_zero())
        fail(ErrKind::ShapeViolation, "X rows a+1..n must vanish");
  for (int i = a + 1; i <= n; ++i)
    for (int j = 1; j <= b; ++j)
      if (!Y.at(i, j).is_zero())
        fail(ErrKind::ShapeViolation, "Y rows a+1..n, columns 1..b must vanish");
  return StaircaseData{n, a, b, a - b, std::move(X), std::move(Y)};
}

StaircaseData random_staircase(int n, int a, int b, const RingSpec& ring,
                               std::mt19937_64& g) {
  require_field(ring, "random_staircase");
  check_type_params(n, a, b);
  Mat X(n, n, ring), Y(n, n, ring);
  for (int i = 1; i <= a; ++i)
    for (int j = b + 1; j <= n; ++j) X.at(i, j) = random_field_value(ring, g);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!(i > a && j <= b)) Y.at(i, j) = random_field_value(ring, g);
  return validate_shape(n, a, b, std::move(X), std::move(Y));
}

StaircaseData random_regular_staircase(int n, int a, int b, const RingSpec& ring,
                                       std::mt19937_64& g, int* retries,
                                       int max_retries) {
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    StaircaseData S = random_staircase(n, a, b, ring, g);
    if (S.Y.det().is_zero()) continue;
    if (ybar(S.Y).det().is_zero()) continue;
    if (S.b > 0 && det_y2(S).is_zero()) continue;
    if (compute_U(S).det().is_zero()) continue;
    if (retries) *retries = attempt;
    return S;
  }
  fail(ErrKind::SingularPoint, "no regular staircase instance found within the retry budget");
}

StaircaseData symbolic_staircase(int n, int a, int b) {
  check_type_params(n, a, b);
  auto vt = std::make_shared<VarTable>();
  auto name = [n](const char* base, int i, int j) {
    std::ostringstream os;
    os << base << i;
    if (n > 9) os << "_";
    os << j;
    return os.str();
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vt->add(name("x", i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vt->add(name("y", i, j));
  RingSpec ring = RingSpec::symbolic(vt);
  Mat X(n, n, ring), Y(n, n, ring);
  for (int i = 1; i <= a; ++i)
    for (int j = b + 1; j <= n; ++j)
      X.at(i, j) = Value(Poly::variable(static_cast<VarIdx>((i - 1) * n + (j - 1))));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!(i > a && j <= b))
        Y.at(i, j) = Value(Poly::variable(static_cast<VarIdx>(n * n + (i - 1) * n + (j - 1))));
  return validate_shape(n, a, b, std::move(X), std::move(Y));
}

Mat build_core_matrix(const StaircaseData& S) {
  const int n = S.n, b = S.b, k = S.k;
  const int N = (k - 1) * n + b;
  Mat Phi(N, N, S.ring());
  for (int r = 1; r <= N; ++r) {
    // Block row i with inner row rho: rows come in k - 1 bands of height
    // n - 1, then one band of height a - 1.
    int i, rho;
    if (r <= (k - 1) * (n - 1)) {
      i = (r - 1) / (n - 1) + 1;
      rho = r - (i - 1) * (n - 1) + 1;
    } else {
      i = k;
      rho = r - (k - 1) * (n - 1) + 1;
    }
    for (int c = 1; c <= N; ++c) {
      int j, t;
      if (c <= (k - 1) * n) {
        j = (c - 1) / n + 1;
        t = c - (j - 1) * n;
      } else {
        j = k;
        t = c - (k - 1) * n;
      }
      if (j == i - 1)
        Phi.at(r, c) = S.X.at(rho, t);
      else if (j == i)
        Phi.at(r, c) = S.Y.at(rho, t);
    }
  }
  return Phi;
}

Mat build_core_ext(const StaircaseData& S) {
  Mat Phi = build_core_matrix(S);
  const int N = Phi.rows();
  Mat E(N, N + 1, S.ring());
  for (int r = 1; r <= S.n - 1; ++r) E.at(r, 1) = S.X.at(r + 1, S.n);
  for (int r = 1; r <= N; ++r)
    for (int c = 1; c <= N; ++c) E.at(r, c + 1) = Phi.at(r, c);
  return E;
}

Value trailing_minor(const Mat& Phi, int i) {
  const int N = Phi.rows();
  if (i < 1 || i > N + 1) fail(ErrKind::IndexOutOfRange, "trailing minor index");
  if (i == N + 1) return Value::one(Phi.ring());
  return Phi.window(i, N, i, N).det();
}

CoreMinors build_core(const StaircaseData& S) {
  CoreMinors cm;
  cm.Phi = build_core_matrix(S);
  const int N = cm.Phi.rows();
  cm.phi.reserve(static_cast<std::size_t>(N) + 1);
  for (int i = 1; i <= N + 1; ++i) cm.phi.push_back(trailing_minor(cm.Phi, i));
  return cm;
}

Mat ybar(const Mat& Y) { return Y.window(2, Y.rows(), 2, Y.cols()); }

Value gamma_numerator(const Mat& Y) { return Y.minor_deleting({2}, {1}).det(); }

Value gamma_of(const Mat& Y) {
  require_field(Y.ring(), "gamma_of");
  Value d = ybar(Y).det();
  if (d.is_zero()) fail(ErrKind::Singular, "Ybar is singular");
  return gamma_numerator(Y).div(d);
}

Value det_y2(const StaircaseData& S) {
  if (S.b == 0) return Value::one(S.ring());
  return S.Y.window(S.k + 1, S.a, 1, S.b).det();
}

Mat compute_U(const StaircaseData& S) {
  require_field(S.ring(), "compute_U");
  if (S.Y.det().is_zero()) fail(ErrKind::Singular, "Y is singular");
  Mat Wa = (S.X * S.Y.inverse()).window(1, S.a, 1, S.a);
  Mat W11 = Wa.window(1, S.k, 1, S.k);
  if (S.b == 0) return W11;
  Value d2 = det_y2(S);
  if (d2.is_zero()) fail(ErrKind::Singular, "Y2 is singular");
  Mat W21 = Wa.window(S.k + 1, S.a, 1, S.k);
  Mat Y1 = S.Y.window(1, S.k, 1, S.b);
  Mat Y2 = S.Y.window(S.k + 1, S.a, 1, S.b);
  return W11 - Y1 * Y2.inverse() * W21;
}

std::vector<Value> pencil_coeffs(const StaircaseData& S) {
  const RingSpec& ring = S.ring();
  if (ring.kind != RingKind::Symbolic && S.Y.det().is_zero())
    fail(ErrKind::Singular, "Y is singular");
  std::vector<Value> xs, ys;
  for (int m = 0; m <= S.k; ++m) {
    Value mu = Value::integer(m, ring);
    xs.push_back(mu);
    ys.push_back((S.Y + S.X.scalar_mul(mu)).det());
  }
  std::vector<Value> c = interpolate_univariate(xs, ys, ring);
  c.resize(static_cast<std::size_t>(S.k) + 1, Value::zero(ring));
  return c;
}

Value phi1_star(const StaircaseData& S) {
  const int n = S.n, k = S.k;
  const RingSpec& ring = S.ring();
  Mat U = compute_U(S);
  Value dU = U.det();
  if (dU.is_zero()) fail(ErrKind::Singular, "U is singular");
  Value dYbar = ybar(S.Y).det();
  if (dYbar.is_zero()) fail(ErrKind::Singular, "Ybar is singular");
  Value g = gamma_numerator(S.Y).div(dYbar);
  Vec w = vec_add(unit_vec(k, 2, ring), vec_scale(g, unit_vec(k, 1, ring)));
  Vec vg = matvec(U, w);
  Value dKstar = k_star(U.inverse(), unit_vec(k, 1, ring), vg).det();
  Value ck = S.Y.det() * dU;
  long half = static_cast<long>(k) * (k - 1) / 2;
  Value sgn = parity_sign(half * (1 + n + static_cast<long>(n) * k) + k, ring);
  return sgn * dKstar * ck.pow(static_cast<std::uint64_t>((k - 1) * (k - 2))) *
         det_y2(S).pow(static_cast<std::uint64_t>(k - 1)) *
         dYbar.pow(static_cast<std::uint64_t>(k));
}

std::vector<LemmaReport> verify_detphi_lemmas(const StaircaseData& S) {
  const int n = S.n, k = S.k;
  const RingSpec& ring = S.ring();
  require_field(ring, "verify_detphi_lemmas");
  Value dY = S.Y.det();
  if (dY.is_zero()) fail(ErrKind::SingularPoint, "det Y = 0");
  Value dYbar = ybar(S.Y).det();
  if (dYbar.is_zero()) fail(ErrKind::SingularPoint, "det Ybar = 0");
  Value dY2 = det_y2(S);
  if (dY2.is_zero()) fail(ErrKind::SingularPoint, "det Y2 = 0");
  Mat U = compute_U(S);
  Value g = gamma_numerator(S.Y).div(dYbar);
  Vec e1 = unit_vec(k, 1, ring);
  Vec w = vec_add(unit_vec(k, 2, ring), vec_scale(g, e1));
  auto ce = power_chain(U, e1, k - 1);
  auto cw = power_chain(U, w, k - 1);

  Mat Phi = build_core_matrix(S);
  long ne1 = static_cast<long>(n) * (static_cast<long>(k) * (k - 1) / 2);
  Value eps1 = parity_sign(ne1, ring);
  Value eps2 = parity_sign(ne1 + 1, ring);
  Value epsL = parity_sign(static_cast<long>(n) * ((static_cast<long>(k) - 2) * (k - 3) / 2), ring);
  Value dYk1 = dY.pow(static_cast<std::uint64_t>(k - 1));
  Value dYk2 = dY.pow(static_cast<std::uint64_t>(k - 2));

  std::vector<std::vector<Vec>> colsets(3);
  for (int j = k - 1; j >= 0; --j) colsets[0].push_back(ce[static_cast<std::size_t>(j)]);
  colsets[1].push_back(cw[static_cast<std::size_t>(k - 1)]);
  for (int j = k - 2; j >= 0; --j) colsets[1].push_back(ce[static_cast<std::size_t>(j)]);
  colsets[2].push_back(ce[static_cast<std::size_t>(k - 2)]);
  colsets[2].push_back(cw[static_cast<std::size_t>(k - 2)]);
  for (int j = k - 3; j >= 0; --j) colsets[2].push_back(ce[static_cast<std::size_t>(j)]);

  Value r1 = trailing_minor(Phi, 1) - eps1 * dYk1 * dY2 * Mat::from_columns(colsets[0], ring).det();
  Value r2 = trailing_minor(Phi, 2) - eps2 * dYk2 * dYbar * dY2 * Mat::from_columns(colsets[1], ring).det();
  Value rL = trailing_minor(Phi, n + 1) - epsL * dYk2 * dY2 * Mat::from_columns(colsets[2], ring).det();
  return {{"phi1", r1, r1.is_zero()}, {"phi2", r2, r2.is_zero()},
          {"phi(n+1)", rL, rL.is_zero()}};
}

namespace {

/// Shared pieces of the cleared minor expressions.
struct ClearedCtx {
  int n = 0, k = 0;
  RingSpec ring;
  Value dY, dY2, dYbar, gg;
  Mat Uhat, Phi;
  std::vector<Vec> ce;  // Uhat^j e_1
  Value eps1, eps2, epsL;
};

ClearedCtx cleared_setup(const StaircaseData& S) {
  const int n = S.n, a = S.a, b = S.b, k = S.k;
  ClearedCtx C;
  C.n = n;
  C.k = k;
  C.ring = S.ring();
  C.dY = S.Y.det();
  C.dY2 = det_y2(S);
  C.dYbar = ybar(S.Y).det();
  C.gg = gamma_numerator(S.Y);

  // P = (X adj Y)_{[1,a]}, first k columns only; adj Y column j is the
  // cofactor row j of Y.
  Mat P(a, k, C.ring);
  for (int j = 1; j <= k; ++j) {
    std::vector<Value> adj_col(static_cast<std::size_t>(n) + 1);
    for (int l = 1; l <= n; ++l) {
      Value m = S.Y.minor_deleting({j}, {l}).det();
      adj_col[static_cast<std::size_t>(l)] = ((j + l) % 2 == 0) ? m : -m;
    }
    for (int i = 1; i <= a; ++i) {
      Value s = Value::zero(C.ring);
      for (int l = 1; l <= n; ++l) s = s + S.X.at(i, l) * adj_col[static_cast<std::size_t>(l)];
      P.at(i, j) = s;
    }
  }
  C.Uhat = P.window(1, k, 1, k);
  if (b > 0) {
    C.Uhat = C.Uhat.scalar_mul(C.dY2) -
             S.Y.window(1, k, 1, b) * S.Y.window(k + 1, a, 1, b).adjugate() *
                 P.window(k + 1, a, 1, k);
  }
  C.ce = power_chain(C.Uhat, unit_vec(k, 1, C.ring), k - 1);
  C.Phi = build_core_matrix(S);
  long ne1 = static_cast<long>(n) * (static_cast<long>(k) * (k - 1) / 2);
  C.eps1 = parity_sign(ne1, C.ring);
  C.eps2 = parity_sign(ne1 + 1, C.ring);
  C.epsL = parity_sign(static_cast<long>(n) * ((static_cast<long>(k) - 2) * (k - 3) / 2), C.ring);
  return C;
}

/// One cleared expression, with the common factors (det Y)^{k-1} det Y2
/// already cancelled from both sides so that k = 2 instances need no
/// polynomial products at all on the Krylov side.
LemmaReport cleared_lemma(const ClearedCtx& C, int which) {
  const int k = C.k;
  const RingSpec& ring = C.ring;
  auto yp = [&](long e) { return C.dY.pow(static_cast<std::uint64_t>(e)); };
  auto y2p = [&](long e) { return C.dY2.pow(static_cast<std::uint64_t>(e)); };
  long half = static_cast<long>(k) * (k - 1) / 2;
  Vec vhat = vec_add(vec_scale(C.dYbar, unit_vec(k, 2, ring)),
                     vec_scale(C.gg, unit_vec(k, 1, ring)));
  if (which == 1) {
    std::vector<Vec> cols;
    for (int j = k - 1; j >= 0; --j) cols.push_back(C.ce[static_cast<std::size_t>(j)]);
    Value r = trailing_minor(C.Phi, 1) * yp((static_cast<long>(k) - 1) * (k - 2) / 2) * y2p(half - 1) -
              C.eps1 * Mat::from_columns(cols, ring).det();
    return {"phi1", r, r.is_zero()};
  }
  if (which == 2) {
    std::vector<Vec> cols;
    cols.push_back(power_chain(C.Uhat, vhat, k - 1).back());
    for (int j = k - 2; j >= 0; --j) cols.push_back(C.ce[static_cast<std::size_t>(j)]);
    Value r = trailing_minor(C.Phi, 2) * yp(half - k + 2) * y2p(half - 1) -
              C.eps2 * Mat::from_columns(cols, ring).det();
    return {"phi2", r, r.is_zero()};
  }
  std::vector<Vec> cols;
  cols.push_back(C.ce[static_cast<std::size_t>(k - 2)]);
  cols.push_back(power_chain(C.Uhat, vhat, k - 2).back());
  for (int j = k - 3; j >= 0; --j) cols.push_back(C.ce[static_cast<std::size_t>(j)]);
  Value phin1 = trailing_minor(C.Phi, C.n + 1);
  Value dML = Mat::from_columns(cols, ring).det();
  Value r = (k == 2)
                ? phin1 * C.dYbar - C.epsL * C.dY2 * dML
                : phin1 * yp((static_cast<long>(k) - 2) * (k - 1) / 2) *
                          y2p((static_cast<long>(k) - 2) * (k + 1) / 2 - 1) * C.dYbar -
                      C.epsL * dML;
  return {"phi(n+1)", r, r.is_zero()};
}

}  // namespace

std::vector<LemmaReport> verify_detphi_cleared(const StaircaseData& S) {
  ClearedCtx C = cleared_setup(S);
  return {cleared_lemma(C, 1), cleared_lemma(C, 2), cleared_lemma(C, 3)};
}

LemmaReport verify_detphi_cleared_one(const StaircaseData& S, int which) {
  if (which < 1 || which > 3) fail(ErrKind::IndexOutOfRange, "lemma index is 1, 2 or 3");
  return cleared_lemma(cleared_setup(S), which);
}

namespace {

/// RHS of the main identity from precomputed pieces.
Value main_identity_rhs(const StaircaseData& S, const std::vector<Value>& c,
                        const Value& phi2, const Value& phi_n1, const Value& dYbar) {
  const RingSpec& ring = S.ring();
  Value xterm = parity_sign(S.n - 1, ring) * dYbar * phi_n1;
  Value rhs = Value::zero(ring);
  for (int i = 0; i <= S.k; ++i)
    rhs = rhs + c[static_cast<std::size_t>(i)] * xterm.pow(static_cast<std::uint64_t>(i)) *
                    phi2.pow(static_cast<std::uint64_t>(S.k - i));
  return rhs;
}

}  // namespace

IdentityReport verify_main_identity(const StaircaseData& S) {
  const RingSpec& ring = S.ring();
  require_field(ring, "verify_main_identity");
  if (S.Y.det().is_zero()) fail(ErrKind::SingularPoint, "det Y = 0");
  if (S.b > 0 && det_y2(S).is_zero()) fail(ErrKind::SingularPoint, "det Y2 = 0");
  Value dYbar = ybar(S.Y).det();
  if (dYbar.is_zero()) fail(ErrKind::SingularPoint, "det Ybar = 0");
  if (compute_U(S).det().is_zero()) fail(ErrKind::SingularPoint, "det U = 0");

  Mat Phi = build_core_matrix(S);
  Value ph1 = trailing_minor(Phi, 1);
  Value ph2 = trailing_minor(Phi, 2);
  Value phn1 = trailing_minor(Phi, S.n + 1);
  std::vector<Value> c = pencil_coeffs(S);
  Value rhs = main_identity_rhs(S, c, ph2, phn1, dYbar);
  Value residual = ph1 * phi1_star(S) - rhs;
  IdentityReport rep;
  rep.identity = "main-identity";
  rep.instance = type_str(S);
  rep.residual = residual;
  rep.pass = residual.is_zero();
  return rep;
}

Value main_identity_quotient(const StaircaseData& S) {
  Mat Phi = build_core_matrix(S);
  Value ph1 = trailing_minor(Phi, 1);
  if (ph1.is_zero()) fail(ErrKind::SingularPoint, "phi_1 = 0");
  Value ph2 = trailing_minor(Phi, 2);
  Value phn1 = trailing_minor(Phi, S.n + 1);
  std::vector<Value> c = pencil_coeffs(S);
  Value rhs = main_identity_rhs(S, c, ph2, phn1, ybar(S.Y).det());
  return rhs.div(ph1);
}

nlohmann::json staircase_to_json(const StaircaseData& S) {
  return nlohmann::json{{"n", S.n}, {"a", S.a}, {"b", S.b},
                        {"X", matrix_to_json(S.X)}, {"Y", matrix_to_json(S.Y)}};
}

StaircaseData staircase_from_json(const nlohmann::json& j, const RingSpec* default_ring) {
  for (const char* key : {"n", "a", "b", "X", "Y"})
    if (!j.contains(key)) fail(ErrKind::ParseError, std::string("staircase json needs key ") + key);
  int n = j.at("n").get<int>(), a = j.at("a").get<int>(), b = j.at("b").get<int>();
  Mat X = matrix_from_json(j.at("X"), default_ring);
  RingSpec rx = X.ring();
  Mat Y = matrix_from_json(j.at("Y"), &rx);
  return validate_shape(n, a, b, std::move(X), std::move(Y));
}

}  // namespace sclab
