#include "sclab/identities.hpp"

#include <algorithm>
#include <sstream>

#include "sclab/krylov.hpp"
#include "sclab/rng.hpp"

namespace sclab {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    std::ostringstream os;
    os << what << " index " << i << " outside [" << lo << ", " << hi << "]";
    fail(ErrKind::IndexInvalid, os.str());
  }
}

RingSpec ring_of_scalar(const Value& v) {
  switch (v.kind()) {
    case RingKind::Rational: return RingSpec::rational();
    case RingKind::PrimeField: return RingSpec::prime_field(v.as_fp().modulus());
    default: fail(ErrKind::ConfigError, "witness search needs a field scalar");
  }
}

}  // namespace

Value desnanot_jacobi_residual(const Mat& A, int alpha, int beta, int gamma, int delta) {
  const int n = A.rows();
  if (A.cols() != n) fail(ErrKind::NotSquare, "desnanot_jacobi_residual: A must be square");
  check_index(alpha, 1, n, "row");
  check_index(beta, 1, n, "row");
  check_index(gamma, 1, n, "column");
  check_index(delta, 1, n, "column");
  if (alpha == beta || gamma == delta)
    fail(ErrKind::IndexInvalid, "desnanot_jacobi_residual: indices must be distinct in each pair");
  if (alpha > beta) std::swap(alpha, beta);
  if (gamma > delta) std::swap(gamma, delta);
  Value big = A.det() * A.minor_deleting({alpha, beta}, {gamma, delta}).det();
  Value cross = A.minor_deleting({alpha}, {delta}).det() * A.minor_deleting({beta}, {gamma}).det();
  Value diag = A.minor_deleting({alpha}, {gamma}).det() * A.minor_deleting({beta}, {delta}).det();
  return big + cross - diag;
}

Value plucker_residual(const Mat& B, int alpha, int beta, int gamma, int delta) {
  const int m = B.rows();
  if (B.cols() != m + 1) fail(ErrKind::DimensionMismatch, "plucker_residual: B must be m x (m+1)");
  check_index(alpha, 1, m + 1, "column");
  check_index(beta, 1, m + 1, "column");
  check_index(gamma, 1, m + 1, "column");
  check_index(delta, 1, m, "row");
  int c[3] = {alpha, beta, gamma};
  std::sort(c, c + 3);
  if (c[0] == c[1] || c[1] == c[2])
    fail(ErrKind::IndexInvalid, "plucker_residual: columns must be distinct");
  alpha = c[0], beta = c[1], gamma = c[2];
  Value t1 = B.minor_deleting({delta}, {alpha, beta}).det() * B.minor_deleting({}, {gamma}).det();
  Value t2 = B.minor_deleting({delta}, {beta, gamma}).det() * B.minor_deleting({}, {alpha}).det();
  Value t3 = B.minor_deleting({delta}, {alpha, gamma}).det() * B.minor_deleting({}, {beta}).det();
  return t1 + t2 - t3;
}

std::pair<Value, Value> pluckpluck_sides(const Mat& B) {
  const int m = B.rows();
  if (B.cols() != m + 1 || m < 3)
    fail(ErrKind::DimensionMismatch, "pluckpluck: B must be m x (m+1) with m >= 3");
  Value p1 = B.minor_deleting({1, 2}, {1, m, m + 1}).det();
  Value p2 = B.minor_deleting({1}, {1, 2}).det();
  Value p3 = B.minor_deleting({}, {m + 1}).det();
  Value p4 = B.minor_deleting({1, 2}, {1, 2, m + 1}).det();
  Value p5 = B.minor_deleting({1}, {m, m + 1}).det();
  Value p6 = B.minor_deleting({}, {1}).det();
  Value p7 = B.minor_deleting({1}, {1, m + 1}).det();
  Value p8 = B.minor_deleting({}, {2}).det();
  Value p9 = B.minor_deleting({1, 2}, {2, m, m + 1}).det();
  Value lhs = p1 * p2 * p3 + p4 * p5 * p6;
  Value rhs = p7 * (p1 * p8 - p9 * p6);
  return {lhs, rhs};
}

Value pluckpluck_residual(const Mat& B) {
  auto [lhs, rhs] = pluckpluck_sides(B);
  return lhs - rhs;
}

Value long_identity_residual(const Mat& A, const Vec& u, const Vec& v) {
  const int k = A.rows();
  if (A.cols() != k || k < 2)
    fail(ErrKind::DimensionMismatch, "long_identity_residual: A must be k x k with k >= 2");
  KrylovTriple t = krylov(A, u, v);
  Value d1 = t.K1.det();
  Value d2 = t.K2.det();
  Mat pencil = A.scalar_mul(d1) - Mat::identity(k, A.ring()).scalar_mul(d2);
  Value lhs = pencil.det();
  Value rhs = t.K.det() * k_star(A, u, v).det();
  bool neg = ((static_cast<long>(k) * (k - 1) / 2) % 2) != 0;
  return neg ? lhs + rhs : lhs - rhs;
}

Mat gencop_witness(int k, const Value& gamma, std::mt19937_64& g, bool strengthened) {
  if (k < 2) fail(ErrKind::DimensionMismatch, "gencop_witness: k must be at least 2");
  RingSpec ring = ring_of_scalar(gamma);
  const Value zero = Value::zero(ring);

  auto small_entry = [&](bool nonzero) {
    for (;;) {
      long x = static_cast<long>(uniform_below(g, 19)) - 9;
      if (ring.kind == RingKind::PrimeField) {
        Value v{nonzero ? random_fp_nonzero(g, ring.modulus) : random_fp(g, ring.modulus)};
        return v;
      }
      if (!nonzero || x != 0) return Value::integer(x, ring);
    }
  };

  for (int attempt = 0; attempt < 32; ++attempt) {
    Mat C(k, k, ring);
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) C.at(i, j) = small_entry(false);
    C.at(1, 1) = zero;                                   // kills the first eigencomponent of e1
    for (int i = 2; i <= k; ++i) C.at(i, 1) = small_entry(true);
    C.at(1, 2) = small_entry(true);

    if (C.det().is_zero()) continue;
    if ((C.at(2, 2) + gamma * C.at(2, 1)).is_zero()) continue;
    if (strengthened) {
      // Dominant Cauchy-Binet coefficient of each leading minor of A:
      // both complementary corner minors of C must survive.
      bool ok = true;
      for (int m = 1; m < k && ok; ++m)
        ok = !C.window(k - m + 1, k, 1, m).det().is_zero() &&
             !C.window(1, k - m, m + 1, k).det().is_zero();
      if (!ok) continue;
    }

    Mat Cinv = C.inverse();
    for (int s = 1; s <= 32; ++s) {
      Value t = Value::integer(2, ring).pow(static_cast<std::uint64_t>(s));
      Mat D(k, k, ring);
      Value tp = Value::one(ring);
      for (int i = 1; i <= k; ++i) {
        tp = tp * t;
        D.at(i, i) = tp;
      }
      Mat A = Cinv * D * C;
      Vec e1 = unit_vec(k, 1, ring);
      if (!krylov(A, e1, e1).K.det().is_zero()) continue;  // cannot happen; guard anyway
      Vec vg = matvec(A.inverse(), vec_add(unit_vec(k, 2, ring), vec_scale(gamma, e1)));
      if (k_star(A, e1, vg).det().is_zero()) continue;
      if (strengthened) {
        bool ok = true;
        for (int m = 1; m <= k && ok; ++m) ok = !A.window(1, m, 1, m).det().is_zero();
        if (!ok) continue;
      }
      return A;
    }
  }
  fail(ErrKind::WitnessSearchFailed, "gencop_witness: no witness within the sampling budget");
}

std::vector<Value> interpolate_univariate(const std::vector<Value>& xs,
                                          const std::vector<Value>& ys,
                                          const RingSpec& ring) {
  const std::size_t s = xs.size();
  if (s == 0 || ys.size() != s)
    fail(ErrKind::DimensionMismatch, "interpolate_univariate: node/value length mismatch");

  std::vector<Value> dd = ys;  // Newton divided differences, in place
  for (std::size_t j = 1; j < s; ++j)
    for (std::size_t i = s - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]).div(xs[i] - xs[i - j]);
      if (i == j) break;
    }

  std::vector<Value> acc{dd[s - 1]};
  for (std::size_t r = s - 1; r-- > 0;) {
    // acc <- acc * (x - xs[r]) + dd[r]
    std::vector<Value> nxt(acc.size() + 1, Value::zero(ring));
    for (std::size_t d = 0; d < acc.size(); ++d) {
      nxt[d + 1] = nxt[d + 1] + acc[d];
      nxt[d] = nxt[d] - acc[d] * xs[r];
    }
    nxt[0] = nxt[0] + dd[r];
    acc = std::move(nxt);
  }
  while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
  return acc;
}

int coeffs_degree(const std::vector<Value>& coeffs) {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (!coeffs[i].is_zero()) return static_cast<int>(i);
  return -1;
}

ThetaOutcome theta_sides(const Mat& base, const PerturbationSpec& spec) {
  const RingSpec& ring = base.ring();
  const int cells = static_cast<int>(spec.theta_cells.size());
  if (cells == 0) fail(ErrKind::ConfigError, "theta_sides: no perturbation cells");
  // Each cell is linear in theta and a determinant term uses at most one
  // entry per row, so every minor has theta-degree <= cells and each side of
  // the three-minor identity has degree <= 3 * cells. That many nodes plus
  // one reconstruct both sides exactly.
  const int nodes = 3 * cells + 1;

  std::vector<Value> xs, ls, rs;
  xs.reserve(nodes), ls.reserve(nodes), rs.reserve(nodes);
  for (int t = 0; t < nodes; ++t) {
    Value th = Value::integer(t, ring);
    Mat M = base;
    for (const auto& [r, c] : spec.theta_cells) M.at(r, c) = M.at(r, c) + th;
    auto [lhs, rhs] = pluckpluck_sides(M.window(spec.rlo, spec.rhi, spec.clo, spec.chi));
    xs.push_back(th);
    ls.push_back(lhs);
    rs.push_back(rhs);
  }

  ThetaOutcome out;
  out.lhs_coeffs = interpolate_univariate(xs, ls, ring);
  out.rhs_coeffs = interpolate_univariate(xs, rs, ring);
  out.lhs_degree = coeffs_degree(out.lhs_coeffs);
  out.rhs_degree = coeffs_degree(out.rhs_coeffs);

  out.residual_zero = true;
  Value first_bad = Value::zero(ring);
  const std::size_t width = std::max(out.lhs_coeffs.size(), out.rhs_coeffs.size());
  for (std::size_t i = 0; i < width; ++i) {
    Value l = i < out.lhs_coeffs.size() ? out.lhs_coeffs[i] : Value::zero(ring);
    Value r = i < out.rhs_coeffs.size() ? out.rhs_coeffs[i] : Value::zero(ring);
    Value d = l - r;
    if (!d.is_zero()) {
      out.residual_degree = static_cast<int>(i);
      if (out.residual_zero) {
        out.residual_zero = false;
        first_bad = d;
      }
    }
  }
  out.degree_ok = out.residual_degree <= spec.degree_bound;
  const std::size_t ci = static_cast<std::size_t>(spec.coeff_index);
  Value lc = ci < out.lhs_coeffs.size() ? out.lhs_coeffs[ci] : Value::zero(ring);
  Value rc = ci < out.rhs_coeffs.size() ? out.rhs_coeffs[ci] : Value::zero(ring);
  out.coeff_residual = out.residual_zero ? lc - rc : first_bad;
  return out;
}

IdentityReport theta_exchange_check(const Mat& base, const PerturbationSpec& spec) {
  ThetaOutcome out = theta_sides(base, spec);
  IdentityReport rep;
  rep.identity = "theta-pluckpluck";
  std::ostringstream os;
  os << spec.name << ": window [" << spec.rlo << "," << spec.rhi << "]x[" << spec.clo << ","
     << spec.chi << "], side degrees " << out.lhs_degree << "/" << out.rhs_degree
     << ", residual degree " << out.residual_degree << " (bound " << spec.degree_bound
     << "), coefficient " << spec.coeff_index;
  rep.instance = os.str();
  rep.residual = out.coeff_residual;
  rep.pass = out.residual_zero && out.degree_ok;
  return rep;
}

}  // namespace sclab
