/// @file staircase.hpp
/// @brief Staircase matrix pairs, their core matrix, trailing minors, and the
///        multinomial determinantal identity connecting them.
///
/// A staircase pair of type (n, a, b) with k = a - b >= 2 is a pair of n x n
/// matrices (X, Y) with X vanishing on rows a+1..n and on the upper-left
/// a x b corner, and Y vanishing on the lower-left (n-a) x b corner. The core
/// matrix Phi is the square window of the associated periodic block band
/// matrix whose trailing principal minors phi_i drive the exchange relations;
/// this module builds Phi, computes the pencil coefficients c_i of
/// det(Y + mu X), the companion-reduction matrix U, and verifies both the
/// Krylov-determinant expressions for phi_1, phi_2, phi_{n+1} and the main
/// identity  phi_1 phi_1^* = sum_i c_i ((-1)^{n-1} det Ybar phi_{n+1})^i
/// phi_2^{k-i}.
#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "sclab/identities.hpp"
#include "sclab/matrix.hpp"

namespace sclab {

/// A validated staircase pair; k = a - b.
struct StaircaseData {
  int n = 0, a = 0, b = 0, k = 0;
  Mat X, Y;
  const RingSpec& ring() const { return X.ring(); }
};

/// Checks the zero-block shape and parameter ranges (1 <= b+1 < a <= n);
/// throws Error(ShapeViolation) naming the violated block or bound.
StaircaseData validate_shape(int n, int a, int b, Mat X, Mat Y);

/// Random field-ring instance: free entries uniform, forced blocks zero.
StaircaseData random_staircase(int n, int a, int b, const RingSpec& ring,
                               std::mt19937_64& g);

/// Resamples random_staircase until det Y, det Ybar, det Y2 and det U are all
/// nonzero; at most max_retries resamples, then Error(SingularPoint).
StaircaseData random_regular_staircase(int n, int a, int b, const RingSpec& ring,
                                       std::mt19937_64& g, int* retries = nullptr,
                                       int max_retries = 32);

/// Fully symbolic instance over fresh variables x_ij, y_ij. The variable
/// table lists x_ij at index (i-1)n + (j-1) and y_ij at n^2 + (i-1)n + (j-1);
/// entries inside forced zero blocks are the zero polynomial.
StaircaseData symbolic_staircase(int n, int a, int b);

/// Core matrix Phi of size N = (k-1)n + b: block row i < k carries X_{[2,n]}
/// in block column i-1 and Y_{[2,n]} in block column i; block row k carries
/// X_{[2,a]} and the first b columns of Y_{[2,a]}.
Mat build_core_matrix(const StaircaseData& S);

/// Phi with one extra leading column (the band column just left of the top
/// Y block): X_{[2,n]}^{[n]} beside the first block row, zeros below.
/// Returned as an N x (N+1) matrix whose column j+1 is column j of Phi.
Mat build_core_ext(const StaircaseData& S);

/// det Phi_{[i,N]}^{[i,N]}; i = N+1 gives the empty minor 1.
Value trailing_minor(const Mat& Phi, int i);

/// Core matrix together with all trailing minors phi_1 .. phi_{N+1}.
struct CoreMinors {
  Mat Phi;
  std::vector<Value> phi;  // phi[i-1] holds phi_i
  const Value& phi_at(int i) const { return phi.at(static_cast<std::size_t>(i) - 1); }
};
CoreMinors build_core(const StaircaseData& S);

/// Y_{[2,n]}^{[2,n]}.
Mat ybar(const Mat& Y);
/// det of Y with row 2 and column 1 deleted: the numerator of gamma.
Value gamma_numerator(const Mat& Y);
/// gamma = gamma_numerator / det Ybar; field rings, Error(Singular) on
/// singular Ybar.
Value gamma_of(const Mat& Y);
/// det Y_{[k+1,a]}^{[1,b]}, the lower coefficient block; 1 when b = 0.
Value det_y2(const StaircaseData& S);

/// k x k companion-reduction matrix U = W11 - Y1 Y2^{-1} W21 built from the
/// first a rows W of X Y^{-1}; field rings only, Error(Singular) naming Y or
/// Y2.
Mat compute_U(const StaircaseData& S);

/// Coefficients c_0 .. c_k of det(Y + mu X) as a polynomial in mu, found by
/// exact interpolation at mu = 0..k. c_0 = det Y and c_k = det Y det U.
/// Field rings require det Y != 0 (Error(Singular)); the symbolic ring is
/// handled directly.
std::vector<Value> pencil_coeffs(const StaircaseData& S);

/// The cofactor term phi_1^* of the main identity, via the third Krylov
/// matrix of (U^{-1}; e_1, v_gamma):
///   phi_1^* = (-1)^{k(k-1)/2} eps1 eps2^k det K*  c_k^{(k-1)(k-2)}
///             (det Y2)^{k-1} (det Ybar)^k.
/// Field rings only; Error(SingularPoint) names the vanishing factor.
Value phi1_star(const StaircaseData& S);

/// One verified minor expression; pass iff residual == 0.
struct LemmaReport {
  std::string name;
  Value residual;
  bool pass = false;
};

/// Field-point check of the three Krylov-determinant expressions for phi_1,
/// phi_2 and phi_{n+1}, exactly as stated (v_gamma = U(e_2 + gamma e_1),
/// U^{k-3} v_gamma computed as U^{k-2}(e_2 + gamma e_1)).
/// Error(SingularPoint) when a needed factor vanishes.
std::vector<LemmaReport> verify_detphi_lemmas(const StaircaseData& S);

/// Denominator-cleared polynomial versions of the same three expressions,
/// valid over every ring and proved identically over the symbolic one:
/// U is replaced by Uhat = det Y2 P11 - Y1 adj(Y2) P21 with
/// P = (X adj Y)_{[1,a]} and U = Uhat / (det Y det Y2); after clearing, the
/// common factor (det Y)^{k-1} det Y2 is cancelled from both sides, so each
/// check multiplies by the smallest power of det Y, det Y2 that makes both
/// sides polynomial.
std::vector<LemmaReport> verify_detphi_cleared(const StaircaseData& S);
/// Single cleared expression: which = 1 (phi_1), 2 (phi_2), 3 (phi_{n+1}).
/// Lets callers budget the phi_2 check separately; it is the only one whose
/// cleared form still carries a product by det Y.
LemmaReport verify_detphi_cleared_one(const StaircaseData& S, int which);

/// Field-point check of the main identity; the report carries the residual
/// phi_1 phi_1^* - RHS. Error(SingularPoint) on a degenerate instance.
IdentityReport verify_main_identity(const StaircaseData& S);

/// Symbolic divisibility form of the main identity: the RHS is divided
/// exactly by phi_1 and the quotient (the symbolic phi_1^*) is returned;
/// Error(NotDivisible) if the identity fails.
Value main_identity_quotient(const StaircaseData& S);

nlohmann::json staircase_to_json(const StaircaseData& S);
StaircaseData staircase_from_json(const nlohmann::json& j,
                                  const RingSpec* default_ring = nullptr);

}  // namespace sclab
