/// @file identities.hpp
/// @brief Determinantal identity residuals, perturbation checks, witness search.
///
/// Index notation follows the superscript/subscript minor convention used
/// throughout the library: subscripts list deleted rows, superscripts list
/// deleted columns. Every residual returns exactly zero on a valid instance,
/// in every ring, including the symbolic one.
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sclab/matrix.hpp"

namespace sclab {

/// Outcome of a single identity evaluation; pass holds iff residual == 0.
struct IdentityReport {
  std::string identity;
  std::string instance;
  Value residual;
  bool pass = false;
  std::uint64_t seed = 0;
  int trial = -1;
  int retries = 0;
};

/// det A * det A_{ab}^{cd} + det A_a^d * det A_b^c - det A_a^c * det A_b^d,
/// with rows alpha != beta deleted in the subscript pairs and columns
/// gamma != delta in the superscript pairs. Index order is canonicalized.
Value desnanot_jacobi_residual(const Mat& A, int alpha, int beta, int gamma, int delta);

/// Three-term Pluecker relation for an m x (m+1) matrix B: columns
/// alpha, beta, gamma (canonicalized to ascending order) and row delta:
/// det B^{ab}_d * det B^{c} + det B^{bc}_d * det B^{a} - det B^{ac}_d * det B^{b}.
Value plucker_residual(const Mat& B, int alpha, int beta, int gamma, int delta);

/// Fixed-index corollary of the Pluecker relation for m x (m+1), m >= 3,
/// with the index pattern (1, 2, m, m+1). Returns LHS - RHS.
Value pluckpluck_residual(const Mat& B);
/// The two sides separately, for coefficient-wise perturbation analysis.
std::pair<Value, Value> pluckpluck_sides(const Mat& B);

/// det(det K1 * A - det K2 * I) - (-1)^{k(k-1)/2} det K * det K*; k >= 2.
Value long_identity_residual(const Mat& A, const Vec& u, const Vec& v);

/// Invertible witness A = C^{-1} diag(t, t^2, ..., t^k) C with c_11 = 0 such
/// that det K(A; e1) = 0 while det K*(A; e1, A^{-1}(e2 + gamma e1)) != 0.
/// The strengthened variant additionally keeps every leading principal minor
/// of A nonzero. The ring (rational or prime field) is taken from gamma;
/// t escalates through powers of 2. Throws WitnessSearchFailed on budget
/// exhaustion.
Mat gencop_witness(int k, const Value& gamma, std::mt19937_64& g, bool strengthened = true);

/// Exact interpolation: unique polynomial of degree < xs.size() through the
/// nodes (xs[i], ys[i]), returned as coefficients from constant term upward
/// with trailing zeros trimmed. Nodes must be pairwise distinct; works over
/// any ring in which differences of nodes are invertible (field rings, or the
/// symbolic ring with integer nodes).
std::vector<Value> interpolate_univariate(const std::vector<Value>& xs,
                                          const std::vector<Value>& ys,
                                          const RingSpec& ring);
/// Degree of a trimmed coefficient list; -1 for the zero polynomial.
int coeffs_degree(const std::vector<Value>& coeffs);

/// Data-only description of a theta-perturbed identity instance: add theta at
/// the listed 1-based cells of the base matrix, cut the window, and require
/// the fixed-index Pluecker corollary to vanish identically in theta with
/// both sides of stated degree at most degree_bound. The coefficient at
/// theta^coeff_index is the one carrying the exchange relation.
struct PerturbationSpec {
  std::string name;
  std::vector<std::pair<int, int>> theta_cells;
  int rlo = 1, rhi = 0, clo = 1, chi = 0;
  int degree_bound = 0;
  int coeff_index = 0;
};

/// Interpolated theta-expansion of both sides of the perturbed identity.
/// degree_ok bounds the residual polynomial lhs - rhs; the individual sides
/// can exceed the bound (their top coefficients then agree and cancel).
struct ThetaOutcome {
  std::vector<Value> lhs_coeffs, rhs_coeffs;
  int lhs_degree = -1, rhs_degree = -1;
  int residual_degree = -1;
  bool residual_zero = false;
  bool degree_ok = false;
  Value coeff_residual;
};

ThetaOutcome theta_sides(const Mat& base, const PerturbationSpec& spec);
IdentityReport theta_exchange_check(const Mat& base, const PerturbationSpec& spec);

}  // namespace sclab
