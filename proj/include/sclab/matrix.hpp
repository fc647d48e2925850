/// @file matrix.hpp
/// @brief Dense exact matrices over a Value ring with 1-based submatrix calculus.
///
/// All public indexing is 1-based and inclusive, matching the row-set /
/// column-set superscript-subscript notation used by the verification
/// routines; "hatted" (deleted-index) selection is provided separately.
/// Determinants dispatch per ring: Gaussian elimination over the prime
/// field, fraction-free Bareiss over rationals, memoized sparse Laplace
/// expansion over polynomials. det of the empty 0x0 matrix is 1.
#pragma once

#include <string>
#include <vector>

#include "sclab/value.hpp"

namespace sclab {

using Vec = std::vector<Value>;

enum class DetAlgo { Auto, Gauss, Bareiss, LaplaceMemo, Cofactor };

class Mat {
public:
  Mat() : rows_(0), cols_(0), ring_(RingSpec::rational()) {}
  Mat(int rows, int cols, RingSpec ring);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingSpec& ring() const { return ring_; }

  /// 1-based element access.
  Value& at(int i, int j);
  const Value& at(int i, int j) const;

  static Mat identity(int n, const RingSpec& ring);
  static Mat from_columns(const std::vector<Vec>& cols, const RingSpec& ring);

  /// Rows rlo..rhi and columns clo..chi, all 1-based inclusive.
  Mat window(int rlo, int rhi, int clo, int chi) const;
  /// Explicit strictly increasing 1-based index lists.
  Mat submatrix(const std::vector<int>& rowset, const std::vector<int>& colset) const;
  /// Complement selection: delete the listed rows/columns.
  Mat minor_deleting(const std::vector<int>& rows_del, const std::vector<int>& cols_del) const;

  Mat transpose() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scalar_mul(const Value& c) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Value det(DetAlgo algo = DetAlgo::Auto) const;
  /// Exact inverse over a field ring (rationals or prime field).
  Mat inverse() const;
  /// Cofactor-transpose matrix; defined for every ring and for singular input.
  Mat adjugate() const;

  Vec col(int j) const;
  Vec row(int i) const;

  std::string str(int pad = 0) const;

private:
  Value det_gauss() const;
  Value det_bareiss() const;
  Value det_laplace_memo() const;
  Value det_cofactor() const;
  void check_square() const;

  int rows_, cols_;
  RingSpec ring_;
  std::vector<Value> e_;
};

Vec matvec(const Mat& A, const Vec& v);
Vec unit_vec(int n, int i, const RingSpec& ring);  // 1-based position
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Value& c, const Vec& v);

}  // namespace sclab
