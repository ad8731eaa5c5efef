#include "hgt/linalg.hpp"

#include <sstream>

namespace hgt {

RatMat RatMat::identity(size_t n) {
  RatMat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
  RatMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
  RatMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw error("matrix shape mismatch");
  RatMat out(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& v = (*this)(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) out(i, j) += v * o(k, j);
    }
  return out;
}

RatMat RatMat::operator*(const Rational& c) const {
  RatMat out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

bool RatMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw error("inverse of non-square matrix");
  size_t n = rows_;
  RatMat a = *this;
  RatMat inv = identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw error("singular matrix");
    if (piv != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rational d = a(col, col);
    for (size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a(r, col);
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SMat SMat::identity(TablePtr table, size_t n) {
  SMat m(table, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = GradedScalar::constant(table, 1);
  return m;
}

SMat SMat::from_rat(TablePtr table, const RatMat& src) {
  SMat m(table, src.rows(), src.cols());
  for (size_t r = 0; r < src.rows(); ++r)
    for (size_t c = 0; c < src.cols(); ++c)
      if (src(r, c) != 0) m(r, c) = GradedScalar::constant(table, src(r, c));
  return m;
}

SMat SMat::operator+(const SMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
  SMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

SMat SMat::operator-(const SMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
  SMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

SMat SMat::operator-() const {
  SMat out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

SMat SMat::operator*(const SMat& o) const {
  if (cols_ != o.rows_) throw error("matrix shape mismatch");
  SMat out(table_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const GradedScalar& v = (*this)(i, k);
      if (v.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        out(i, j) += v * o(k, j);
      }
    }
  return out;
}

SMat SMat::operator*(const GradedScalar& s) const {
  SMat out = *this;
  for (auto& x : out.a_) x = x * s;
  return out;
}

SMat SMat::operator*(const Rational& c) const {
  SMat out = *this;
  for (auto& x : out.a_) x = x * c;
  return out;
}

bool SMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RatMat SMat::body() const {
  RatMat out(rows_, cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      for (const auto& [m, coeff] : (*this)(r, c).terms())
        if (m.empty()) out(r, c) = coeff;
    }
  return out;
}

SMat SMat::substitute(const std::function<const GradedScalar*(SymId)>& assignment) const {
  SMat out = *this;
  for (auto& x : out.a_) x = x.substitute(assignment);
  return out;
}

SMat SMat::derive(const std::function<const GradedScalar*(SymId)>& image, int op_degree) const {
  SMat out = *this;
  for (auto& x : out.a_) x = x.derive(image, op_degree);
  return out;
}

std::string SMat::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    os << "[ ";
    for (size_t c = 0; c < cols_; ++c) os << (*this)(r, c).str() << (c + 1 < cols_ ? ", " : " ");
    os << "]\n";
  }
  return os.str();
}

SMat exp_series(const SMat& n, size_t max_steps) {
  if (n.rows() != n.cols()) throw error("exp of non-square matrix");
  SMat out = SMat::identity(n.table(), n.rows());
  SMat pow = SMat::identity(n.table(), n.rows());
  Integer fact = 1;
  for (size_t k = 1; k <= max_steps; ++k) {
    pow = pow * n;
    if (pow.is_zero()) return out;
    fact *= static_cast<unsigned>(k);
    out = out + pow * Rational(Integer(1), fact);
  }
  throw error("exp series did not terminate (matrix not nilpotent)");
}

SMat log_series(const SMat& m, size_t max_steps) {
  if (m.rows() != m.cols()) throw error("log of non-square matrix");
  SMat t = m - SMat::identity(m.table(), m.rows());
  SMat out(m.table(), m.rows(), m.cols());
  SMat pow = SMat::identity(m.table(), m.rows());
  for (size_t k = 1; k <= max_steps; ++k) {
    pow = pow * t;
    if (pow.is_zero()) return out;
    Rational c(Integer((k & 1) ? 1 : -1), Integer(k));
    out = out + pow * c;
  }
  throw error("log series did not terminate (matrix not unipotent)");
}

SMat unipotent_inverse(const SMat& m, size_t max_steps) {
  if (m.rows() != m.cols()) throw error("inverse of non-square matrix");
  SMat t = m - SMat::identity(m.table(), m.rows());
  SMat out = SMat::identity(m.table(), m.rows());
  SMat pow = SMat::identity(m.table(), m.rows());
  for (size_t k = 1; k <= max_steps; ++k) {
    pow = pow * t;
    if (pow.is_zero()) return out;
    out = out + pow * Rational((k & 1) ? -1 : 1);
  }
  throw error("inverse series did not terminate (matrix not unipotent)");
}

RatMat extraction_matrix(const std::vector<RatMat>& basis) {
  if (basis.empty()) return RatMat(0, 0);
  size_t k = basis.size();
  size_t n2 = basis[0].rows() * basis[0].cols();
  // Gram matrix approach with exact rationals: G = B B^T, L = G^{-1} B.
  RatMat b(k, n2);
  for (size_t i = 0; i < k; ++i) {
    if (basis[i].rows() != basis[0].rows() || basis[i].cols() != basis[0].cols())
      throw error("basis shape mismatch");
    for (size_t r = 0; r < basis[i].rows(); ++r)
      for (size_t c = 0; c < basis[i].cols(); ++c) b(i, r * basis[i].cols() + c) = basis[i](r, c);
  }
  RatMat g(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (size_t t = 0; t < n2; ++t) s += b(i, t) * b(j, t);
      g(i, j) = s;
    }
  RatMat ginv = g.inverse();  // throws when the basis is dependent
  return ginv * b;
}

std::vector<GradedScalar> extract_coords(const RatMat& L, const std::vector<RatMat>& basis, const SMat& M) {
  size_t k = basis.size();
  std::vector<GradedScalar> coords(k, GradedScalar(M.table()));
  for (size_t i = 0; i < k; ++i) {
    GradedScalar s(M.table());
    for (size_t r = 0; r < M.rows(); ++r)
      for (size_t c = 0; c < M.cols(); ++c) {
        const Rational& l = L(i, r * M.cols() + c);
        if (l != 0) s += M(r, c) * l;
      }
    coords[i] = s;
  }
  // residual check: M must lie in the span
  SMat recon(M.table(), M.rows(), M.cols());
  for (size_t i = 0; i < k; ++i) recon = recon + SMat::from_rat(M.table(), basis[i]) * coords[i];
  if (!(recon - M).is_zero()) throw error("matrix does not lie in the algebra span (representation bug)");
  return coords;
}

}  // namespace hgt
