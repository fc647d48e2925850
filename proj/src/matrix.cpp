#include "sclab/matrix.hpp"

#include <sstream>
#include <unordered_map>

namespace sclab {

Mat::Mat(int rows, int cols, RingSpec ring) : rows_(rows), cols_(cols), ring_(std::move(ring)) {
  if (rows < 0 || cols < 0) fail(ErrKind::DimensionMismatch, "negative matrix dimension");
  e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Value::zero(ring_));
}

Value& Mat::at(int i, int j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) fail(ErrKind::IndexOutOfRange, "matrix index out of range");
  return e_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

const Value& Mat::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) fail(ErrKind::IndexOutOfRange, "matrix index out of range");
  return e_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

Mat Mat::identity(int n, const RingSpec& ring) {
  Mat m(n, n, ring);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Value::one(ring);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, const RingSpec& ring) {
  int nc = static_cast<int>(cols.size());
  int nr = nc == 0 ? 0 : static_cast<int>(cols[0].size());
  Mat m(nr, nc, ring);
  for (int j = 0; j < nc; ++j) {
    if (static_cast<int>(cols[j].size()) != nr) fail(ErrKind::DimensionMismatch, "ragged column list");
    for (int i = 0; i < nr; ++i) m.at(i + 1, j + 1) = cols[j][static_cast<std::size_t>(i)];
  }
  return m;
}

Mat Mat::window(int rlo, int rhi, int clo, int chi) const {
  if (rlo < 1 || clo < 1 || rhi > rows_ || chi > cols_ || rlo > rhi + 1 || clo > chi + 1) {
    fail(ErrKind::IndexOutOfRange, "window out of range");
  }
  Mat m(rhi - rlo + 1, chi - clo + 1, ring_);
  for (int i = rlo; i <= rhi; ++i) {
    for (int j = clo; j <= chi; ++j) m.at(i - rlo + 1, j - clo + 1) = at(i, j);
  }
  return m;
}

Mat Mat::submatrix(const std::vector<int>& rowset, const std::vector<int>& colset) const {
  for (std::size_t i = 0; i + 1 < rowset.size(); ++i) {
    if (rowset[i] >= rowset[i + 1]) fail(ErrKind::IndexOutOfRange, "row set not strictly increasing");
  }
  for (std::size_t j = 0; j + 1 < colset.size(); ++j) {
    if (colset[j] >= colset[j + 1]) fail(ErrKind::IndexOutOfRange, "column set not strictly increasing");
  }
  Mat m(static_cast<int>(rowset.size()), static_cast<int>(colset.size()), ring_);
  for (std::size_t i = 0; i < rowset.size(); ++i) {
    for (std::size_t j = 0; j < colset.size(); ++j) {
      m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = at(rowset[i], colset[j]);
    }
  }
  return m;
}

Mat Mat::minor_deleting(const std::vector<int>& rows_del, const std::vector<int>& cols_del) const {
  std::vector<int> rs, cs;
  auto keep = [](int n, const std::vector<int>& del, std::vector<int>& out) {
    std::vector<bool> drop(static_cast<std::size_t>(n) + 1, false);
    for (int d : del) {
      if (d < 1 || d > n) fail(ErrKind::IndexOutOfRange, "deleted index out of range");
      drop[static_cast<std::size_t>(d)] = true;
    }
    for (int i = 1; i <= n; ++i) {
      if (!drop[static_cast<std::size_t>(i)]) out.push_back(i);
    }
  };
  keep(rows_, rows_del, rs);
  keep(cols_, cols_del, cs);
  return submatrix(rs, cs);
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_, ring_);
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrKind::DimensionMismatch, "matadd shape mismatch");
  Mat m(rows_, cols_, ring_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrKind::DimensionMismatch, "matsub shape mismatch");
  Mat m(rows_, cols_, ring_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(ErrKind::DimensionMismatch, "matmul shape mismatch");
  Mat m(rows_, o.cols_, ring_);
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= o.cols_; ++j) {
      Value acc = Value::zero(ring_);
      for (int t = 1; t <= cols_; ++t) {
        const Value& a = at(i, t);
        const Value& b = o.at(t, j);
        if (!a.is_zero() && !b.is_zero()) acc = acc + a * b;
      }
      m.at(i, j) = acc;
    }
  }
  return m;
}

Mat Mat::scalar_mul(const Value& c) const {
  Mat m(rows_, cols_, ring_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != o.e_[i]) return false;
  }
  return true;
}

void Mat::check_square() const {
  if (rows_ != cols_) fail(ErrKind::NotSquare, "determinant of non-square matrix");
}

Value Mat::det(DetAlgo algo) const {
  check_square();
  if (rows_ == 0) return Value::one(ring_);
  switch (algo) {
    case DetAlgo::Gauss: return det_gauss();
    case DetAlgo::Bareiss: return det_bareiss();
    case DetAlgo::LaplaceMemo: return det_laplace_memo();
    case DetAlgo::Cofactor: return det_cofactor();
    case DetAlgo::Auto: break;
  }
  switch (ring_.kind) {
    case RingKind::PrimeField: return det_gauss();
    case RingKind::Rational: return det_bareiss();
    case RingKind::Symbolic: return det_laplace_memo();
  }
  fail(ErrKind::RingMismatch, "bad ring kind");
}

Value Mat::det_gauss() const {
  Mat m = *this;
  int n = rows_;
  bool neg = false;
  Value det = Value::one(ring_);
  for (int k = 1; k <= n; ++k) {
    int piv = 0;
    for (int i = k; i <= n; ++i) {
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == 0) return Value::zero(ring_);
    if (piv != k) {
      for (int j = k; j <= n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      neg = !neg;
    }
    det = det * m.at(k, k);
    Value inv_p = Value::one(ring_).div(m.at(k, k));
    for (int i = k + 1; i <= n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      Value f = m.at(i, k) * inv_p;
      for (int j = k + 1; j <= n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
      m.at(i, k) = Value::zero(ring_);
    }
  }
  return neg ? -det : det;
}

Value Mat::det_bareiss() const {
  Mat m = *this;
  int n = rows_;
  bool neg = false;
  Value prev = Value::one(ring_);
  for (int k = 1; k < n; ++k) {
    int piv = 0;
    for (int i = k; i <= n; ++i) {
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == 0) return Value::zero(ring_);
    if (piv != k) {
      for (int j = k; j <= n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      neg = !neg;
    }
    for (int i = k + 1; i <= n; ++i) {
      for (int j = k + 1; j <= n; ++j) {
        // Fraction-free step: every division here is exact (entries are minors).
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)).div(prev);
      }
      m.at(i, k) = Value::zero(ring_);
    }
    prev = m.at(k, k);
  }
  Value d = m.at(n, n);
  return neg ? -d : d;
}

Value Mat::det_laplace_memo() const {
  int n = rows_;
  if (n > 62) fail(ErrKind::DimensionMismatch, "memoized Laplace limited to 62 rows");
  std::unordered_map<std::uint64_t, Value> memo;
  // State: bitmask of still-available rows; column index = n - popcount(mask).
  auto rec = [&](auto&& self, std::uint64_t mask) -> Value {
    if (mask == 0) return Value::one(ring_);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int c = n - __builtin_popcountll(mask) + 1;
    Value acc = Value::zero(ring_);
    int pos = 0;
    for (int r = 1; r <= n; ++r) {
      if (!(mask & (1ull << (r - 1)))) continue;
      ++pos;
      const Value& a = at(r, c);
      if (!a.is_zero()) {
        Value sub = self(self, mask & ~(1ull << (r - 1)));
        if (!sub.is_zero()) {
          Value t = a * sub;
          acc = (pos % 2 == 1) ? acc + t : acc - t;
        }
      }
    }
    memo.emplace(mask, acc);
    return acc;
  };
  std::uint64_t full = n == 62 ? ~0ull >> 2 : (1ull << n) - 1;
  return rec(rec, full);
}

Value Mat::det_cofactor() const {
  int n = rows_;
  if (n == 0) return Value::one(ring_);
  if (n == 1) return at(1, 1);
  Value acc = Value::zero(ring_);
  for (int j = 1; j <= n; ++j) {
    const Value& a = at(1, j);
    if (a.is_zero()) continue;
    Value sub = minor_deleting({1}, {j}).det_cofactor();
    Value t = a * sub;
    acc = (j % 2 == 1) ? acc + t : acc - t;
  }
  return acc;
}

Mat Mat::inverse() const {
  check_square();
  if (ring_.kind == RingKind::Symbolic) {
    fail(ErrKind::RingMismatch, "inverse requires a field ring; use adjugate for polynomials");
  }
  int n = rows_;
  Mat m = *this;
  Mat inv = Mat::identity(n, ring_);
  for (int k = 1; k <= n; ++k) {
    int piv = 0;
    for (int i = k; i <= n; ++i) {
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == 0) fail(ErrKind::Singular, "matrix is singular");
    if (piv != k) {
      for (int j = 1; j <= n; ++j) {
        std::swap(m.at(k, j), m.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    }
    Value ip = Value::one(ring_).div(m.at(k, k));
    for (int j = 1; j <= n; ++j) {
      m.at(k, j) = m.at(k, j) * ip;
      inv.at(k, j) = inv.at(k, j) * ip;
    }
    for (int i = 1; i <= n; ++i) {
      if (i == k || m.at(i, k).is_zero()) continue;
      Value f = m.at(i, k);
      for (int j = 1; j <= n; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
      }
    }
  }
  return inv;
}

Mat Mat::adjugate() const {
  check_square();
  int n = rows_;
  Mat adj(n, n, ring_);
  if (n == 0) return adj;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Value c = minor_deleting({i}, {j}).det();
      adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return adj;
}

Vec Mat::col(int j) const {
  Vec v;
  v.reserve(static_cast<std::size_t>(rows_));
  for (int i = 1; i <= rows_; ++i) v.push_back(at(i, j));
  return v;
}

Vec Mat::row(int i) const {
  Vec v;
  v.reserve(static_cast<std::size_t>(cols_));
  for (int j = 1; j <= cols_; ++j) v.push_back(at(i, j));
  return v;
}

std::string Mat::str(int pad) const {
  std::ostringstream os;
  for (int i = 1; i <= rows_; ++i) {
    os << "[";
    for (int j = 1; j <= cols_; ++j) {
      std::string s = at(i, j).str(ring_);
      if (pad > static_cast<int>(s.size())) s = std::string(static_cast<std::size_t>(pad) - s.size(), ' ') + s;
      os << (j > 1 ? " " : "") << s;
    }
    os << "]\n";
  }
  return os.str();
}

Vec matvec(const Mat& A, const Vec& v) {
  if (static_cast<int>(v.size()) != A.cols()) fail(ErrKind::DimensionMismatch, "matvec shape mismatch");
  Vec out;
  out.reserve(static_cast<std::size_t>(A.rows()));
  for (int i = 1; i <= A.rows(); ++i) {
    Value acc = Value::zero(A.ring());
    for (int j = 1; j <= A.cols(); ++j) {
      const Value& a = A.at(i, j);
      if (!a.is_zero() && !v[static_cast<std::size_t>(j - 1)].is_zero()) {
        acc = acc + a * v[static_cast<std::size_t>(j - 1)];
      }
    }
    out.push_back(acc);
  }
  return out;
}

Vec unit_vec(int n, int i, const RingSpec& ring) {
  Vec v(static_cast<std::size_t>(n), Value::zero(ring));
  if (i < 1 || i > n) fail(ErrKind::IndexOutOfRange, "unit vector index out of range");
  v[static_cast<std::size_t>(i - 1)] = Value::one(ring);
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrKind::DimensionMismatch, "vector add shape mismatch");
  Vec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vec vec_scale(const Value& c, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const Value& x : v) out.push_back(c * x);
  return out;
}

}  // namespace sclab
