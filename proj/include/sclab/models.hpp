/// @file models.hpp
/// @brief Worked model seeds: the double model built from corner minors of a
///        matrix pair, the periodic band model, the GL6 Gamma data, and the
///        finite-type shift-cycle exploration for three-diagonal bands.
///
/// Each builder compiles a grid of named functions into a Seed whose quiver
/// uses flat vertex ids with a documented layout, attaches exact values
/// computed from the input matrices, and stores the unique nontrivial
/// exchange string on the special vertex. The special-vertex exchange then
/// reproduces the corresponding multinomial determinantal identity verified
/// by the staircase module, which the tests use as a cross-module oracle.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sclab/seed.hpp"
#include "sclab/staircase.hpp"

namespace sclab {

/// det X_{[i,n]}^{[j,j+n-i]}: lower-left corner minors, 1 <= j <= i <= n.
Value minor_g(const Mat& X, int i, int j);
/// det Y_{[i,i+n-j]}^{[j,n]}: upper-right corner minors, 1 <= i <= j <= n.
Value minor_h(const Mat& Y, int i, int j);

/// Canonical value fingerprint for cross-seed identity: field values print
/// as themselves, symbolic values print their evaluations at `points` fixed
/// pseudo-random prime-field points. Equal polynomials always agree; distinct
/// ones collide with probability at most (total degree / p) per point.
std::string value_fingerprint(const Value& v, int points = 3);

/// Double model over a pair (X, Y) of n x n matrices, n >= 3.
///
/// Vertex layout (2n^2 ids): grid cell (i,j), 1 <= i <= 2n-1, 1 <= j <= n,
/// has id (i-1)n + (j-1); the extra frozen vertex holding g_11 = det X is
/// id (2n-1)n; the n-1 isolated frozen vertices holding the string
/// coefficients c~_i follow. Cell (i,j) holds h_ij for j >= i, the trailing
/// core minor phi_{(i-j-1)n+j} for 1 <= i-j <= n-1, and g_{i-n+1,j} for
/// i-j >= n; the diagonal i-j = n-1 carries phi_{N-n+j} = g_jj for j >= 2.
/// Frozen: the top row, the first column below row n, the extra vertex and
/// the isolated ones. The special cell (2,1) holds phi_1 with multiplicity n
/// and the reversed string (1, c~_{n-1}, ..., c~_1, 1).
struct DoubleModel {
  int n = 0;
  int N = 0;  // core size (n-1)n
  StaircaseData data;
  CoreMinors core;
  Seed seed;
  int special = 0, extra = 0;
  std::vector<int> isolated;
  /// Grid cell to flat id; Error(IndexInvalid) outside the grid.
  int vertex(int i, int j) const;
};

/// Builds the double model; every attached value must be nonzero
/// (Error(ZeroClusterValue) names the first vanishing one).
DoubleModel build_sigma_double(int n, const Mat& X, const Mat& Y);

/// Random field instance resampled until all attached minors are nonzero.
DoubleModel random_double_model(int n, const RingSpec& ring, std::mt19937_64& g,
                                int max_retries = 64);

/// Band entries A: (k+1) x n with A(m, i) = a_{mi}; m = 1 is the lowest band
/// diagonal, m = k+1 the main one, column i the period slot. The staircase
/// embedding of type (n, k, 0) places X(i, n-k+m+i-1) = a_{mi} for rows
/// i <= k, m <= k-i+1, and Y(i, j) = a_{k+1-(i-j), i} for 0 <= i-j <= k.
/// Error(BandDegenerate) if an entry of diagonal 1 or k+1 is zero.
StaircaseData band_staircase(int k, int n, const Mat& A);

/// Fresh symbolic band entries a_{mi} at variable index (m-1)n + (i-1).
Mat symbolic_band(int k, int n);

/// Band model over entries A, 2 <= k < n.
///
/// Vertex layout ((k+1)n ids): grid cell (i,j), 1 <= i <= n-1,
/// 1 <= j <= k+1, has id (i-1)(k+1) + (j-1); then (0,1), then (0,k+1), then
/// the k-1 isolated string vertices. The left column holds a_11 at (0,1)
/// and a_{1,i+1} at (i,1); the right column
/// holds a_{k+1,i+1} at (i,k+1) with a_{k+1,1} at (0,k+1); both are frozen.
/// Cell (i,j) for 2 <= j <= k holds the tilde minor of index (k-j)(n-1)+i.
/// The special cell (1,k) has multiplicity k and the reversed string
/// (1, c~_{k-1}, ..., c~_1, 1).
struct BandModel {
  int k = 0, n = 0;
  int M = 0;  // tilde core size (k-1)(n-1)
  Mat A;
  StaircaseData data;
  std::vector<Value> tilde_phi;  // tilde_phi[t-1], t = 1..M
  Seed seed;
  int special = 0;
  int top_left = 0, top_right = 0;  // (0,1) and (0,k+1)
  std::vector<int> isolated;
  /// Grid cell to flat id; row 0 exists only at columns 1 and k+1.
  int vertex(int i, int j) const;
};

/// Builds the band model; Error(BandDegenerate) on a vanishing band
/// diagonal entry, Error(ZeroClusterValue) on a vanishing attached minor.
BandModel build_sigma_band(int k, int n, const Mat& A);

/// Random field instance resampled until all attached values are nonzero.
BandModel random_band_model(int k, int n, const RingSpec& ring, std::mt19937_64& g,
                            int max_retries = 64);

/// Cyclic window of the dense principal minor x_{[i,j]} of a k = 2 band:
/// tridiagonal with row r equal to (a_{1,rho}, a_{2,rho}, a_{3,rho}) around
/// the diagonal, rho = ((i+r-2) mod n) + 1; size j-i+1, or j+n-i+1 when the
/// window wraps around.
Mat dense_minor_window(const Mat& A, int i, int j);
/// det of the window. Valid pairs: 1 <= i <= j <= n with (i,j) != (1,n), or
/// 1 <= j < i-1 <= n-1; Error(IndexInvalid) otherwise.
Value dense_principal_minor(const Mat& A, int i, int j);
/// All n(n-1) valid pairs, top size first, in diagonal-start order.
std::vector<std::pair<int, int>> dense_minor_pairs(int n);

/// One mutable variable met during the shift-cycle exploration.
struct YZVariable {
  int cycle = 0;    // 0 = initial seed
  int step = -1;    // mutation index within the cycle, -1 for initial
  std::string label;  // matched dense minor "x[i,j]", empty if unmatched
  std::string fingerprint;
  bool matched = false;
};

/// Outcome of the exploration; complete means every dense principal minor
/// was collected exactly once and nothing else appeared.
struct YZReport {
  int n = 0;
  int cycles = 0;
  // After every cycle the quiver equals the one before it with each frozen
  // column rotated one step (the labels shift a_{m,i} -> a_{m,i+1}).
  bool quiver_periodic = false;
  bool all_matched = false;
  bool complete = false;
  std::vector<YZVariable> variables;
};

/// Runs n-1 shift cycles from the k = 2 band seed on A: mutate the special
/// vertex, then cells (2,2)..(n-1,2) top to bottom. Matches every mutable
/// variable against the dense principal minors by fingerprint, with exact
/// polynomial equality enforced on symbolic rings.
YZReport yz_exploration(int n, const Mat& A);
nlohmann::json yz_report_to_json(const YZReport& r);

/// GL6 Gamma data assembled from 6 x 6 matrices R and S: two staircase
/// pairs of types (5,2,0) and (7,2,0), their cores, and the middle pencil
/// coefficients c_11, c_21 of det(Y + mu X).
struct Gamma6Data {
  Mat R, S;
  StaircaseData pair1, pair2;
  CoreMinors core1, core2;
  Value c11, c21;
  Value det_ybar1, det_ybar2;
};

Gamma6Data build_gamma6(const Mat& R, const Mat& S);

/// The two generalized exchange identities carried by the Gamma data:
///   phi_11 phi_11* = det S_{[1,5]}^{[2,6]} det S_{[1,3]}^{[4,6]} r_62^2
///                    + c_11 r_62 phi_12 + det R_{[5,6]}^{[1,2]} phi_12^2,
///   phi_21 phi_21* = s_16 det S_{[1,3]}^{[4,6]} det R_{[3,6]}^{[1,4]}
///                    (det R_{[2,6]}^{[2,6]})^2 + c_21 det R_{[2,6]}^{[2,6]}
///                    phi_22 + det R phi_22^2,
/// where phi_11* and phi_21* are the staircase cofactors divided by
/// det S_{[1,3]}^{[4,6]} resp. s_16. Field rings only; Error(SingularPoint)
/// on a degenerate instance.
struct Gamma6Check {
  IdentityReport first, second;
  Value phi11_star, phi21_star;
  bool pass = false;
};
Gamma6Check verify_gamma6(const Gamma6Data& G);

struct LabeledValue {
  std::string label;
  Value value;
};
/// The 34-member family at S = R: the corner minors g_ij, h_ij of the 6 x 6
/// grid minus the twelve displaced ones, plus phi_{11..14} and phi_{21..26}.
std::vector<LabeledValue> gamma6_family(const Mat& R);

/// Outcome of one symbolic exchange attempt at a mutable vertex.
struct ExchangeProbe {
  int vertex = -1;
  std::string label;
  enum class Outcome { Divided, BudgetExceeded, NotDivisible } outcome =
      Outcome::Divided;
  long long terms = 0;  // term count of the new value when divided
};

/// Runs generalized_exchange at every mutable vertex of the seed under the
/// given term budget (0 = unlimited) and records the per-vertex outcome;
/// division failures are recorded, never rethrown.
std::vector<ExchangeProbe> probe_all_exchanges(const Seed& s, std::uint64_t budget);

/// Theta-perturbation fixtures reproducing the regularity-proof checks on a
/// double model: one degree-3 pluckpluck fixture per middle cell phi_i,
/// n+1 <= i <= N-1 (coefficient theta^1), and one degree-4 fixture per
/// diagonal cell h_ii, 2 <= i <= n (coefficient theta^2; i = 2 prepends the
/// first row of Y to the doubly-augmented core).
std::vector<std::pair<Mat, PerturbationSpec>> double_theta_fixtures(
    const DoubleModel& D);

/// Same for a band model: one fixture per six-valent cell (columns 3..k-1
/// minus (1,k-1) and (n-1,3)), degree 3(n-1), coefficient theta^{n-1}.
std::vector<std::pair<Mat, PerturbationSpec>> band_theta_fixtures(
    const BandModel& B);

}  // namespace sclab
