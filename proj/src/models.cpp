/// @file models.cpp
/// @brief Double and band model seeds, dense-minor exploration, GL6 Gamma data.

#include "sclab/models.hpp"

#include <algorithm>
#include <sstream>

#include "sclab/identities.hpp"
#include "sclab/rng.hpp"

namespace sclab {

namespace {

constexpr std::uint64_t kFingerprintSeed = 0xF16E55EDull;

std::string ij_label(const char* prefix, int i, int j) {
  std::ostringstream os;
  os << prefix << i;
  if (i > 9 || j > 9) os << "_";
  os << j;
  return os.str();
}

std::string cell_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Value parity_sign(long e, const RingSpec& ring) {
  return (e % 2 == 0) ? Value::one(ring) : Value::integer(-1, ring);
}

void require_square(const Mat& A, int n, const char* what) {
  if (A.rows() != n || A.cols() != n)
    fail(ErrKind::DimensionMismatch,
         std::string(what) + " must be " + std::to_string(n) + " x " + std::to_string(n));
}

/// All values attached so far must be nonzero at a regular model point.
void require_regular_values(const GQuiver& q, const std::vector<Value>& vals,
                            const char* model) {
  for (int v = 0; v < q.size(); ++v)
    if (vals[static_cast<std::size_t>(v)].is_zero())
      fail(ErrKind::ZeroClusterValue,
           std::string(model) + " value " + q.label(v) + " vanishes");
}

}  // namespace

Value minor_g(const Mat& X, int i, int j) {
  const int n = X.rows();
  require_square(X, n, "corner minor matrix");
  if (j < 1 || i < j || i > n)
    fail(ErrKind::IndexInvalid, "minor g" + std::to_string(i) + std::to_string(j) +
                                    " needs 1 <= j <= i <= n");
  return X.window(i, n, j, j + n - i).det();
}

Value minor_h(const Mat& Y, int i, int j) {
  const int n = Y.rows();
  require_square(Y, n, "corner minor matrix");
  if (i < 1 || j < i || j > n)
    fail(ErrKind::IndexInvalid, "minor h" + std::to_string(i) + std::to_string(j) +
                                    " needs 1 <= i <= j <= n");
  return Y.window(i, i + n - j, j, n).det();
}

std::string value_fingerprint(const Value& v, int points) {
  if (v.kind() != RingKind::Symbolic) return v.str();
  const Poly& p = v.as_poly();
  VarIdx nvars = 0;
  for (const PTerm& t : p.terms())
    for (std::size_t f = 0; f < t.m.nfactors(); ++f)
      nvars = std::max(nvars, static_cast<VarIdx>(t.m.var_at(f) + 1));
  const std::uint64_t mod = Fp::default_modulus();
  std::ostringstream os;
  os << "s";
  for (int s = 0; s < points; ++s) {
    std::mt19937_64 g = rng_for_trial(kFingerprintSeed, static_cast<std::uint64_t>(s));
    std::vector<Fp> assign;
    assign.reserve(nvars);
    for (VarIdx i = 0; i < nvars; ++i) assign.push_back(random_fp(g, mod));
    os << ":" << p.eval_fp(assign).residue();
  }
  return os.str();
}

int DoubleModel::vertex(int i, int j) const {
  if (i < 1 || i > 2 * n - 1 || j < 1 || j > n)
    fail(ErrKind::IndexInvalid, "double grid cell " + cell_str(i, j) + " out of range");
  return (i - 1) * n + (j - 1);
}

DoubleModel build_sigma_double(int n, const Mat& X, const Mat& Y) {
  if (n < 3) fail(ErrKind::ShapeViolation, "double model requires n >= 3");
  require_square(X, n, "double model X");
  require_square(Y, n, "double model Y");
  DoubleModel D;
  D.n = n;
  D.N = (n - 1) * n;
  D.data = validate_shape(n, n, 0, X, Y);
  D.core = build_core(D.data);
  const RingSpec& ring = D.data.ring();
  const int N = D.N;

  GQuiver q;
  std::vector<Value> vals;
  vals.reserve(static_cast<std::size_t>(2 * n * n));
  // Grid cells in id order; content switches on the diagonal offset i - j.
  for (int i = 1; i <= 2 * n - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j >= i) {
        q.add_vertex(ij_label("h", i, j), i == 1);
        vals.push_back(minor_h(Y, i, j));
      } else if (i - j <= n - 2) {
        const int t = (i - j - 1) * n + j;
        q.add_vertex("phi" + std::to_string(t), false, (i == 2 && j == 1) ? n : 1);
        vals.push_back(D.core.phi_at(t));
      } else if (i - j == n - 1) {
        // Trailing minors phi_{N-n+j} coincide with g_jj; the family labels
        // these cells g_jj except at j = 1.
        if (j == 1) {
          q.add_vertex("phi" + std::to_string(N - n + 1));
          vals.push_back(D.core.phi_at(N - n + 1));
        } else {
          q.add_vertex(ij_label("g", j, j));
          vals.push_back(minor_g(X, j, j));
        }
      } else {
        q.add_vertex(ij_label("g", i - n + 1, j), j == 1);
        vals.push_back(minor_g(X, i - n + 1, j));
      }
    }
  }
  D.special = (2 - 1) * n;  // cell (2,1)
  D.extra = q.add_vertex("g11", true);
  vals.push_back(minor_g(X, 1, 1));
  // Checked before the pencil so a singular det Y surfaces as its cell name.
  require_regular_values(q, vals, "double model");

  const std::vector<Value> pc = pencil_coeffs(D.data);
  for (int i = 1; i <= n - 1; ++i) {
    D.isolated.push_back(q.add_vertex("ct" + std::to_string(i), true));
    Value ci = parity_sign(static_cast<long>(i) * (n - 1), ring) * pc[static_cast<std::size_t>(i)];
    if (ci.is_zero())
      fail(ErrKind::ZeroClusterValue, "double model value ct" + std::to_string(i) + " vanishes");
    vals.push_back(ci);
  }

  auto vid = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int i = 1; i <= 2 * n - 2; ++i)
    for (int j = 1; j <= n - 1; ++j) q.add_edges(vid(i, j), vid(i + 1, j + 1), 1);
  for (int i = 2; i <= 2 * n - 1; ++i) {
    for (int j = 2; j <= n; ++j) {
      q.add_edges(vid(i, j), vid(i, j - 1), 1);
      q.add_edges(vid(i, j), vid(i - 1, j), 1);
    }
  }
  for (int i = 2; i <= n; ++i) q.add_edges(vid(i, 1), vid(i - 1, 1), 1);
  // Oriented path (n+1,n) -> (3,1) -> (n+2,n) -> (4,1) -> ... -> (2n-1,n).
  for (int j = 1; j <= n - 2; ++j) {
    q.add_edges(vid(n + j, n), vid(j + 2, 1), 1);
    q.add_edges(vid(j + 2, 1), vid(n + j + 1, n), 1);
  }
  q.add_edges(D.extra, D.special, 1);
  q.validate();

  std::vector<CoeffString> strings(static_cast<std::size_t>(q.size()));
  for (int v = 0; v < q.size(); ++v)
    if (q.is_mutable(v)) strings[static_cast<std::size_t>(v)] = trivial_string(q.multiplicity(v));
  // Reversed string (1, c~_{n-1}, ..., c~_1, 1): entry r names c~_{n-r}.
  CoeffString sp(static_cast<std::size_t>(n) + 1, CoeffMonomial::unit());
  for (int r = 1; r <= n - 1; ++r)
    sp[static_cast<std::size_t>(r)].powers[D.isolated[static_cast<std::size_t>(n - r - 1)]] = 1;
  strings[static_cast<std::size_t>(D.special)] = sp;

  D.seed = Seed{std::move(q), std::move(strings), std::move(vals), ring};
  validate_seed(D.seed);
  return D;
}

DoubleModel random_double_model(int n, const RingSpec& ring, std::mt19937_64& g,
                                int max_retries) {
  if (ring.kind == RingKind::Symbolic)
    fail(ErrKind::ConfigError, "random double model needs a field ring");
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    StaircaseData S = random_staircase(n, n, 0, ring, g);
    try {
      return build_sigma_double(n, S.X, S.Y);
    } catch (const Error& e) {
      if (e.kind() != ErrKind::ZeroClusterValue && e.kind() != ErrKind::Singular &&
          e.kind() != ErrKind::SingularPoint)
        throw;
    }
  }
  fail(ErrKind::SingularPoint, "no regular double model instance after " +
                                   std::to_string(max_retries + 1) + " draws");
}

StaircaseData band_staircase(int k, int n, const Mat& A) {
  if (k < 2 || n <= k) fail(ErrKind::ShapeViolation, "band requires 2 <= k < n");
  if (A.rows() != k + 1 || A.cols() != n)
    fail(ErrKind::DimensionMismatch, "band entries must be " + std::to_string(k + 1) +
                                         " x " + std::to_string(n));
  for (int i = 1; i <= n; ++i) {
    if (A.at(1, i).is_zero())
      fail(ErrKind::BandDegenerate, "band entry " + ij_label("a", 1, i) + " vanishes");
    if (A.at(k + 1, i).is_zero())
      fail(ErrKind::BandDegenerate, "band entry " + ij_label("a", k + 1, i) + " vanishes");
  }
  const RingSpec& ring = A.ring();
  Mat X(n, n, ring), Y(n, n, ring);
  for (int i = 1; i <= k; ++i)
    for (int m = 1; m <= k - i + 1; ++m) X.at(i, n - k + m + i - 1) = A.at(m, i);
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(1, i - k); j <= i; ++j) Y.at(i, j) = A.at(k + 1 - (i - j), i);
  return validate_shape(n, k, 0, std::move(X), std::move(Y));
}

Mat symbolic_band(int k, int n) {
  auto vt = std::make_shared<VarTable>();
  for (int m = 1; m <= k + 1; ++m)
    for (int i = 1; i <= n; ++i) vt->add(ij_label("a", m, i));
  RingSpec ring = RingSpec::symbolic(vt);
  Mat A(k + 1, n, ring);
  for (int m = 1; m <= k + 1; ++m)
    for (int i = 1; i <= n; ++i)
      A.at(m, i) = Value(Poly::variable(static_cast<VarIdx>((m - 1) * n + (i - 1))));
  return A;
}

int BandModel::vertex(int i, int j) const {
  if (i == 0 && j == 1) return top_left;
  if (i == 0 && j == k + 1) return top_right;
  if (i < 1 || i > n - 1 || j < 1 || j > k + 1)
    fail(ErrKind::IndexInvalid, "band grid cell " + cell_str(i, j) + " out of range");
  return (i - 1) * (k + 1) + (j - 1);
}

BandModel build_sigma_band(int k, int n, const Mat& A) {
  BandModel B;
  B.k = k;
  B.n = n;
  B.M = (k - 1) * (n - 1);
  B.A = A;
  B.data = band_staircase(k, n, A);
  const RingSpec& ring = A.ring();
  const Mat Phi = build_core_matrix(B.data);
  const Mat Phit = Phi.window(1, B.M, 1, B.M);
  B.tilde_phi.reserve(static_cast<std::size_t>(B.M));
  for (int t = 1; t <= B.M; ++t) B.tilde_phi.push_back(trailing_minor(Phit, t));

  GQuiver q;
  std::vector<Value> vals;
  vals.reserve(static_cast<std::size_t>((k + 1) * n));
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= k + 1; ++j) {
      if (j == 1) {
        q.add_vertex(ij_label("a", 1, i + 1), true);
        vals.push_back(A.at(1, i + 1));
      } else if (j == k + 1) {
        q.add_vertex(ij_label("a", k + 1, i + 1), true);
        vals.push_back(A.at(k + 1, i + 1));
      } else {
        const int t = (k - j) * (n - 1) + i;
        q.add_vertex("tphi" + std::to_string(t), false, (i == 1 && j == k) ? k : 1);
        vals.push_back(B.tilde_phi[static_cast<std::size_t>(t) - 1]);
      }
    }
  }
  B.special = k - 1;  // cell (1,k)
  // With pencil_coeffs built from det(Y + mu X), the top coefficient is
  // (-1)^{k(n-1)} a_11...a_1n, so the normalized value at the corner is a_11
  // itself and ct_k = a_11...a_1n needs no extra sign.
  B.top_left = q.add_vertex("a11", true);
  vals.push_back(A.at(1, 1));
  B.top_right = q.add_vertex(ij_label("a", k + 1, 1), true);
  vals.push_back(A.at(k + 1, 1));
  require_regular_values(q, vals, "band model");

  const std::vector<Value> pc = pencil_coeffs(B.data);
  for (int i = 1; i <= k - 1; ++i) {
    B.isolated.push_back(q.add_vertex("ct" + std::to_string(i), true));
    Value ci = parity_sign(static_cast<long>(i) * (n - 1), ring) * pc[static_cast<std::size_t>(i)];
    if (ci.is_zero())
      fail(ErrKind::ZeroClusterValue, "band model value ct" + std::to_string(i) + " vanishes");
    vals.push_back(ci);
  }

  auto vid = [k](int i, int j) { return (i - 1) * (k + 1) + (j - 1); };
  for (int j = 2; j <= k; ++j) {
    for (int i = 1; i <= n - 2; ++i) {
      q.add_edges(vid(i, j), vid(i + 1, j), 1);
      q.add_edges(vid(i + 1, j), vid(i, j + 1), 1);
    }
    for (int i = 1; i <= n - 1; ++i)
      if (!(i == 1 && j == k)) q.add_edges(vid(i, j), vid(i, j - 1), 1);
  }
  // Dotted path (n-1,3) -> (1,2) -> (n-1,4) -> (1,3) -> ... -> (n-1,k+1).
  for (int j = 3; j <= k; ++j) q.add_edges(vid(n - 1, j), vid(1, j - 1), 1);
  for (int j = 2; j <= k - 1; ++j) q.add_edges(vid(1, j), vid(n - 1, j + 2), 1);
  // Special-frozen star; the (0,k+1) edge points away from the special vertex,
  // and for k = 2 so does the (1,1) edge.
  for (int i = 1; i <= n - 1; ++i) q.add_edges(vid(i, k + 1), B.special, k - 1);
  q.add_edges(B.special, B.top_right, 1);
  q.add_edges(B.top_left, B.special, 1);
  for (int i = 1; i <= n - 1; ++i) {
    if (k == 2 && i == 1)
      q.add_edges(B.special, vid(1, 1), 1);
    else
      q.add_edges(vid(i, 1), B.special, 1);
  }
  q.validate();

  std::vector<CoeffString> strings(static_cast<std::size_t>(q.size()));
  for (int v = 0; v < q.size(); ++v)
    if (q.is_mutable(v)) strings[static_cast<std::size_t>(v)] = trivial_string(q.multiplicity(v));
  CoeffString sp(static_cast<std::size_t>(k) + 1, CoeffMonomial::unit());
  for (int r = 1; r <= k - 1; ++r)
    sp[static_cast<std::size_t>(r)].powers[B.isolated[static_cast<std::size_t>(k - r - 1)]] = 1;
  strings[static_cast<std::size_t>(B.special)] = sp;

  B.seed = Seed{std::move(q), std::move(strings), std::move(vals), ring};
  validate_seed(B.seed);
  return B;
}

BandModel random_band_model(int k, int n, const RingSpec& ring, std::mt19937_64& g,
                            int max_retries) {
  if (ring.kind == RingKind::Symbolic)
    fail(ErrKind::ConfigError, "random band model needs a field ring");
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    Mat A(k + 1, n, ring);
    for (int m = 1; m <= k + 1; ++m)
      for (int i = 1; i <= n; ++i) A.at(m, i) = random_field_value(ring, g);
    try {
      return build_sigma_band(k, n, A);
    } catch (const Error& e) {
      if (e.kind() != ErrKind::BandDegenerate && e.kind() != ErrKind::ZeroClusterValue &&
          e.kind() != ErrKind::Singular && e.kind() != ErrKind::SingularPoint)
        throw;
    }
  }
  fail(ErrKind::SingularPoint, "no regular band model instance after " +
                                   std::to_string(max_retries + 1) + " draws");
}

Mat dense_minor_window(const Mat& A, int i, int j) {
  const int n = A.cols();
  if (A.rows() != 3) fail(ErrKind::DimensionMismatch, "dense minors need 3 x n entries");
  const int size = (j >= i) ? j - i + 1 : j + n - i + 1;
  Mat W(size, size, A.ring());
  for (int r = 1; r <= size; ++r) {
    const int rho = ((i + r - 2) % n) + 1;
    W.at(r, r) = A.at(2, rho);
    if (r + 1 <= size) W.at(r, r + 1) = A.at(3, rho);
    if (r - 1 >= 1) W.at(r, r - 1) = A.at(1, rho);
  }
  return W;
}

Value dense_principal_minor(const Mat& A, int i, int j) {
  const int n = A.cols();
  const bool plain = 1 <= i && i <= j && j <= n && !(i == 1 && j == n);
  const bool wrapped = 1 <= j && j < i - 1 && i <= n;
  if (!plain && !wrapped)
    fail(ErrKind::IndexInvalid, "dense minor x[" + std::to_string(i) + "," +
                                    std::to_string(j) + "] undefined");
  return dense_minor_window(A, i, j).det();
}

std::vector<std::pair<int, int>> dense_minor_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int size = n - 1; size >= 1; --size)
    for (int i = 1; i <= n; ++i) out.emplace_back(i, ((i + size - 2) % n) + 1);
  return out;
}

YZReport yz_exploration(int n, const Mat& A) {
  BandModel B = build_sigma_band(2, n, A);
  YZReport rep;
  rep.n = n;
  rep.cycles = n - 1;

  struct MinorRec {
    int i, j;
    Value v;
    std::string fp;
    bool used = false;
  };
  std::vector<MinorRec> minors;
  for (const auto& [i, j] : dense_minor_pairs(n)) {
    Value v = dense_principal_minor(A, i, j);
    std::string fp = value_fingerprint(v);
    minors.push_back(MinorRec{i, j, std::move(v), std::move(fp)});
  }

  Seed s = B.seed;
  const GQuiver initial_quiver = s.quiver;
  const bool symbolic = s.ring.kind == RingKind::Symbolic;
  auto record = [&](int cycle, int step, int vertex) {
    YZVariable var;
    var.cycle = cycle;
    var.step = step;
    const Value& val = s.values[static_cast<std::size_t>(vertex)];
    var.fingerprint = value_fingerprint(val);
    for (MinorRec& m : minors) {
      if (m.used || m.fp != var.fingerprint) continue;
      if (symbolic && m.v != val) continue;
      m.used = true;
      var.matched = true;
      var.label = "x[" + std::to_string(m.i) + "," + std::to_string(m.j) + "]";
      break;
    }
    rep.variables.push_back(std::move(var));
  };

  for (int i = 1; i <= n - 1; ++i) record(0, -1, B.vertex(i, 2));

  // One cycle advances every frozen entry a_{m,i} to a_{m,i+1}, so the quiver
  // comes back only after transporting frozen vertices one step down each
  // column (wrapping through the corner vertex).
  std::vector<int> shift(static_cast<std::size_t>(s.quiver.size()));
  for (int v = 0; v < s.quiver.size(); ++v) shift[static_cast<std::size_t>(v)] = v;
  shift[static_cast<std::size_t>(B.top_left)] = B.vertex(1, 1);
  shift[static_cast<std::size_t>(B.top_right)] = B.vertex(1, 3);
  for (int i = 1; i <= n - 1; ++i) {
    shift[static_cast<std::size_t>(B.vertex(i, 1))] =
        i == n - 1 ? B.top_left : B.vertex(i + 1, 1);
    shift[static_cast<std::size_t>(B.vertex(i, 3))] =
        i == n - 1 ? B.top_right : B.vertex(i + 1, 3);
  }
  auto transported_equal = [&](const GQuiver& before, const GQuiver& after) {
    for (int u = 0; u < before.size(); ++u)
      for (int v = 0; v < before.size(); ++v)
        if (after.b(shift[static_cast<std::size_t>(u)], shift[static_cast<std::size_t>(v)]) !=
            before.b(u, v))
          return false;
    return true;
  };

  rep.quiver_periodic = true;
  GQuiver cycle_start = initial_quiver;
  for (int cycle = 1; cycle <= n - 1; ++cycle) {
    for (int step = 0; step <= n - 2; ++step) {
      const int v = (step == 0) ? B.special : B.vertex(step + 1, 2);
      s = mutate(s, v);
      record(cycle, step, v);
    }
    if (!transported_equal(cycle_start, s.quiver)) rep.quiver_periodic = false;
    cycle_start = s.quiver;
  }
  rep.all_matched = std::all_of(rep.variables.begin(), rep.variables.end(),
                                [](const YZVariable& v) { return v.matched; });
  const bool all_used =
      std::all_of(minors.begin(), minors.end(), [](const MinorRec& m) { return m.used; });
  rep.complete = rep.all_matched && all_used &&
                 rep.variables.size() == static_cast<std::size_t>(n) * (n - 1);
  return rep;
}

nlohmann::json yz_report_to_json(const YZReport& r) {
  nlohmann::json vars = nlohmann::json::array();
  for (const YZVariable& v : r.variables)
    vars.push_back({{"cycle", v.cycle},
                    {"step", v.step},
                    {"label", v.label},
                    {"fingerprint", v.fingerprint},
                    {"matched", v.matched}});
  return {{"n", r.n},
          {"cycles", r.cycles},
          {"quiver_periodic", r.quiver_periodic},
          {"all_matched", r.all_matched},
          {"complete", r.complete},
          {"variables", std::move(vars)}};
}

Gamma6Data build_gamma6(const Mat& R, const Mat& S) {
  require_square(R, 6, "gamma6 R");
  require_square(S, 6, "gamma6 S");
  if (!R.ring().compatible(S.ring()))
    fail(ErrKind::RingMismatch, "gamma6 matrices live in different rings");
  const RingSpec& ring = R.ring();
  Gamma6Data G;
  G.R = R;
  G.S = S;

  Mat X1(5, 5, ring), Y1(5, 5, ring);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 5; ++j) X1.at(i, j) = S.at(i + 3, j + 1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) Y1.at(i, j) = R.at(i + 4, j);
  for (int i = 3; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) Y1.at(i, j) = S.at(i - 2, j + 1);
  G.pair1 = validate_shape(5, 2, 0, std::move(X1), std::move(Y1));

  Mat X2(7, 7, ring), Y2(7, 7, ring);
  for (int i = 1; i <= 2; ++i)
    for (int j = 5; j <= 7; ++j) X2.at(i, j) = S.at(i + 1, j - 1);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) Y2.at(i, j) = R.at(i, j);
  for (int j = 5; j <= 7; ++j) Y2.at(7, j) = S.at(1, j - 1);
  G.pair2 = validate_shape(7, 2, 0, std::move(X2), std::move(Y2));

  G.core1 = build_core(G.pair1);
  G.core2 = build_core(G.pair2);
  G.c11 = pencil_coeffs(G.pair1)[1];
  G.c21 = pencil_coeffs(G.pair2)[1];
  G.det_ybar1 = ybar(G.pair1.Y).det();
  G.det_ybar2 = ybar(G.pair2.Y).det();
  return G;
}

Gamma6Check verify_gamma6(const Gamma6Data& G) {
  if (G.R.ring().kind == RingKind::Symbolic)
    fail(ErrKind::ConfigError, "gamma6 verification needs a field ring");
  const Value det_s46 = G.S.window(1, 3, 4, 6).det();
  const Value s16 = G.S.at(1, 6);
  if (det_s46.is_zero()) fail(ErrKind::SingularPoint, "det S_{[1,3]}^{[4,6]} vanishes");
  if (s16.is_zero()) fail(ErrKind::SingularPoint, "s16 vanishes");

  Gamma6Check C;
  C.phi11_star = phi1_star(G.pair1).div(det_s46);
  C.phi21_star = phi1_star(G.pair2).div(s16);

  const Value r62 = G.R.at(6, 2);
  const Value phi12 = G.core1.phi_at(2);
  const Value rhs1 = G.S.window(1, 5, 2, 6).det() * det_s46 * r62.pow(2) +
                     G.c11 * r62 * phi12 + G.R.window(5, 6, 1, 2).det() * phi12.pow(2);
  C.first.identity = "gamma6";
  C.first.instance = "pair1(5,2,0)";
  C.first.residual = G.core1.phi_at(1) * C.phi11_star - rhs1;
  C.first.pass = C.first.residual.is_zero();

  const Value det_r26 = G.R.window(2, 6, 2, 6).det();
  const Value phi22 = G.core2.phi_at(2);
  const Value rhs2 = s16 * det_s46 * G.R.window(3, 6, 1, 4).det() * det_r26.pow(2) +
                     G.c21 * det_r26 * phi22 + G.R.det() * phi22.pow(2);
  C.second.identity = "gamma6";
  C.second.instance = "pair2(7,2,0)";
  C.second.residual = G.core2.phi_at(1) * C.phi21_star - rhs2;
  C.second.pass = C.second.residual.is_zero();

  C.pass = C.first.pass && C.second.pass;
  return C;
}

std::vector<LabeledValue> gamma6_family(const Mat& R) {
  require_square(R, 6, "gamma6 family matrix");
  auto removed = [](std::initializer_list<std::pair<int, int>> gone, int i, int j) {
    for (const auto& p : gone)
      if (p.first == i && p.second == j) return true;
    return false;
  };
  std::vector<LabeledValue> fam;
  fam.reserve(34);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= i; ++j)
      if (!removed({{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {6, 1}}, i, j))
        fam.push_back({ij_label("g", i, j), minor_g(R, i, j)});
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (!removed({{1, 3}, {2, 4}, {3, 5}, {4, 6}, {1, 5}, {2, 6}}, i, j))
        fam.push_back({ij_label("h", i, j), minor_h(R, i, j)});
  Gamma6Data G = build_gamma6(R, R);
  for (int i = 1; i <= 4; ++i) fam.push_back({ij_label("phi", 1, i), G.core1.phi_at(i)});
  for (int i = 1; i <= 6; ++i) fam.push_back({ij_label("phi", 2, i), G.core2.phi_at(i)});
  return fam;
}

std::vector<ExchangeProbe> probe_all_exchanges(const Seed& s, std::uint64_t budget) {
  std::vector<ExchangeProbe> out;
  TermBudget::Scope scope(budget);
  for (int v = 0; v < s.quiver.size(); ++v) {
    if (!s.quiver.is_mutable(v)) continue;
    ExchangeProbe probe;
    probe.vertex = v;
    probe.label = s.quiver.label(v);
    try {
      Value nv = generalized_exchange(s, v);
      probe.outcome = ExchangeProbe::Outcome::Divided;
      probe.terms = (nv.kind() == RingKind::Symbolic)
                        ? static_cast<long long>(nv.as_poly().nterms())
                        : 1;
    } catch (const Error& e) {
      if (e.kind() == ErrKind::BudgetExceeded)
        probe.outcome = ExchangeProbe::Outcome::BudgetExceeded;
      else if (e.kind() == ErrKind::NotDivisible)
        probe.outcome = ExchangeProbe::Outcome::NotDivisible;
      else
        throw;
    }
    out.push_back(std::move(probe));
  }
  return out;
}

std::vector<std::pair<Mat, PerturbationSpec>> double_theta_fixtures(const DoubleModel& D) {
  const int n = D.n, N = D.N;
  const RingSpec& ring = D.data.ring();
  std::vector<std::pair<Mat, PerturbationSpec>> out;

  // Middle cells: the core with its periodic predecessor column, one theta.
  const Mat ext = build_core_ext(D.data);
  for (int i = n + 1; i <= N - 1; ++i) {
    PerturbationSpec spec;
    spec.name = "phi" + std::to_string(i);
    spec.theta_cells = {{(n - 1) * (n - 1) + 1, (n - 1) * (n - 1)}};
    spec.rlo = i - n;
    spec.rhi = N;
    spec.clo = i - n;
    spec.chi = N + 1;
    spec.degree_bound = 3;
    spec.coeff_index = 1;
    out.emplace_back(ext, spec);
  }

  // Diagonal cells: the core with two appended unit columns, two thetas;
  // the first diagonal cell additionally prepends the top row of Y.
  Mat aug(N, N + 2, ring);
  for (int r = 1; r <= N; ++r)
    for (int c = 1; c <= N; ++c) aug.at(r, c) = D.core.Phi.at(r, c);
  aug.at(N, N + 1) = Value::one(ring);
  aug.at(N, N + 2) = Value::one(ring);
  for (int i = 2; i <= n; ++i) {
    PerturbationSpec spec;
    spec.name = ij_label("h", i, i);
    spec.degree_bound = 4;
    spec.coeff_index = 2;
    if (i == 2) {
      Mat pre(N + 1, N + 2, ring);
      for (int j = 1; j <= n; ++j) pre.at(1, j) = D.data.Y.at(1, j);
      for (int r = 1; r <= N; ++r)
        for (int c = 1; c <= N + 2; ++c) pre.at(r + 1, c) = aug.at(r, c);
      spec.theta_cells = {{n, n + 1}, {N, N + 1}};
      spec.rlo = 1;
      spec.rhi = N + 1;
      spec.clo = 1;
      spec.chi = N + 2;
      out.emplace_back(std::move(pre), spec);
    } else {
      spec.theta_cells = {{n - 1, n + 1}, {N - 1, N + 1}};
      spec.rlo = i - 2;
      spec.rhi = N;
      spec.clo = i - 1;
      spec.chi = N + 2;
      out.emplace_back(aug, spec);
    }
  }
  return out;
}

std::vector<std::pair<Mat, PerturbationSpec>> band_theta_fixtures(const BandModel& B) {
  const int k = B.k, n = B.n, M = B.M;
  std::vector<std::pair<Mat, PerturbationSpec>> out;
  if (k < 4) return out;  // no six-valent cells below k = 4
  // Tilde core with its periodic predecessor column in base column 1.
  const Mat base = build_core_ext(B.data).window(1, M, 1, M + 1);
  for (int j = 3; j <= k - 1; ++j) {
    for (int i = 1; i <= n - 1; ++i) {
      if ((j == 3 && i == n - 1) || (j == k - 1 && i == 1)) continue;
      const int t = (k - j) * (n - 1) + i;
      PerturbationSpec spec;
      spec.name = "tphi" + std::to_string(t);
      for (int r = 1; r <= n - 1; ++r)
        spec.theta_cells.emplace_back((k - 2) * (n - 1) + r, (k - 2) * (n - 1) + r - 1);
      spec.rlo = t - n;
      spec.rhi = M;
      spec.clo = t - n;
      spec.chi = M + 1;
      spec.degree_bound = 3 * (n - 1);
      spec.coeff_index = n - 1;
      out.emplace_back(base, spec);
    }
  }
  return out;
}

}  // namespace sclab
