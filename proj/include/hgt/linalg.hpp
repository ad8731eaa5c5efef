#pragma once

#include <vector>

#include "hgt/superring.hpp"

namespace hgt {

/// Dense matrix over the rationals.
class RatMat {
 public:
  RatMat() = default;
  RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator*(const Rational& c) const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  /// Gauss-Jordan inverse; throws on singular input.
  RatMat inverse() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Solves X * A = B for the row vectors of X given independent rows of A
/// (least-structure exact solve used for coordinate extraction).
/// Here A is k x m with independent rows; returns the k x m pseudo-extraction
/// L with L * A^T ... see extraction_matrix below for the concrete use.
class SMat;

/// Dense matrix over the graded ring.
class SMat {
 public:
  SMat() = default;
  SMat(TablePtr table, size_t rows, size_t cols)
      : table_(std::move(table)), rows_(rows), cols_(cols), a_(rows * cols, GradedScalar(table_)) {}
  static SMat identity(TablePtr table, size_t n);
  static SMat from_rat(TablePtr table, const RatMat& m);

  const TablePtr& table() const { return table_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  GradedScalar& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const GradedScalar& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  SMat operator+(const SMat& o) const;
  SMat operator-(const SMat& o) const;
  SMat operator-() const;
  SMat operator*(const SMat& o) const;
  SMat operator*(const GradedScalar& s) const;  // right scalar multiple
  SMat operator*(const Rational& c) const;
  bool operator==(const SMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  /// Degree-0 part as a rational matrix; throws if entries have body terms
  /// mixed with symbols of degree 0 that are not rational constants.
  RatMat body() const;

  SMat substitute(const std::function<const GradedScalar*(SymId)>& assignment) const;
  SMat derive(const std::function<const GradedScalar*(SymId)>& image, int op_degree) const;

  std::string str() const;

 private:
  TablePtr table_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<GradedScalar> a_;
};

/// exp for matrices with no degree-0 part or otherwise nilpotent content;
/// iterates until the power vanishes, throwing past `max_steps`.
SMat exp_series(const SMat& n, size_t max_steps = 64);

/// log(I + T) for nilpotent T (same termination rule).
SMat log_series(const SMat& m, size_t max_steps = 64);

/// Inverse of I + T for nilpotent T via the geometric series.
SMat unipotent_inverse(const SMat& m, size_t max_steps = 64);

/// Extraction functionals for the span of independent matrices basis[k]:
/// returns L with coords_k(M) = sum_{r,c} L(k, r*n+c) * M(r,c), such that
/// coords(basis[j]) = delta_{jk}. Throws if the basis is dependent.
RatMat extraction_matrix(const std::vector<RatMat>& basis);

/// Coordinates of M in the span, verifying the residual vanishes.
std::vector<GradedScalar> extract_coords(const RatMat& L, const std::vector<RatMat>& basis, const SMat& M);

}  // namespace hgt
