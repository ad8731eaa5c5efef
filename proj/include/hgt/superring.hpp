#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgt/rational.hpp"

namespace hgt {

/// Free supercommutative ring truncated at a fixed total degree.
///
/// Generators carry a non-negative degree; parity is degree mod 2. Odd
/// generators anticommute and square to zero, even generators commute.
/// Coefficients are exact rationals, so equality of ring elements is exact.

using SymId = uint32_t;

struct GeneratorSymbol {
  std::string name;
  int degree = 0;
  bool odd() const { return degree & 1; }
};

class GeneratorTable {
 public:
  explicit GeneratorTable(int truncation = 6) : truncation_(truncation) {
    if (truncation < 0) throw error("truncation degree must be non-negative");
  }

  SymId add(const std::string& name, int degree) {
    if (degree < 0) throw error("generator degree must be non-negative: " + name);
    if (degree > truncation_)
      throw error("generator degree exceeds the truncation degree: " + name);
    if (index_.count(name)) throw error("duplicate generator name: " + name);
    SymId id = static_cast<SymId>(syms_.size());
    syms_.push_back({name, degree});
    index_[name] = id;
    return id;
  }

  size_t size() const { return syms_.size(); }
  int truncation() const { return truncation_; }
  const GeneratorSymbol& sym(SymId id) const { return syms_.at(id); }
  int degree(SymId id) const { return syms_.at(id).degree; }
  bool odd(SymId id) const { return syms_.at(id).odd(); }
  const std::string& name(SymId id) const { return syms_.at(id).name; }
  std::optional<SymId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<GeneratorSymbol> syms_;
  std::map<std::string, SymId> index_;
  int truncation_;
};

using TablePtr = std::shared_ptr<GeneratorTable>;

/// Canonical monomial: odd ids strictly increasing, even ids non-decreasing.
struct Monomial {
  std::vector<SymId> odd;
  std::vector<SymId> even;

  bool operator==(const Monomial& o) const { return odd == o.odd && even == o.even; }
  bool operator<(const Monomial& o) const {
    if (odd != o.odd) return odd < o.odd;
    return even < o.even;
  }
  bool empty() const { return odd.empty() && even.empty(); }
  int degree(const GeneratorTable& t) const {
    int d = 0;
    for (SymId s : odd) d += t.degree(s);
    for (SymId s : even) d += t.degree(s);
    return d;
  }
  bool contains(SymId s, bool is_odd) const;
  std::string str(const GeneratorTable& t) const;
};

class GradedScalar {
 public:
  GradedScalar() = default;
  explicit GradedScalar(TablePtr table) : table_(std::move(table)) {}
  GradedScalar(TablePtr table, const Rational& c);

  static GradedScalar zero(TablePtr table) { return GradedScalar(std::move(table)); }
  static GradedScalar constant(TablePtr table, const Rational& c) { return GradedScalar(std::move(table), c); }
  static GradedScalar generator(TablePtr table, SymId id);

  const TablePtr& table() const { return table_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

  /// Degree of a homogeneous element; throws on inhomogeneous input.
  int degree() const;
  bool is_homogeneous() const;
  /// Zero elements are homogeneous of every degree.
  bool is_homogeneous_of(int d) const;
  GradedScalar part_of_degree(int d) const;
  int parity_sign() const;  // (-1)^degree for homogeneous elements

  GradedScalar operator-() const;
  GradedScalar operator+(const GradedScalar& o) const;
  GradedScalar operator-(const GradedScalar& o) const;
  GradedScalar operator*(const GradedScalar& o) const;
  GradedScalar operator*(const Rational& c) const;
  GradedScalar& operator+=(const GradedScalar& o) { return *this = *this + o; }
  GradedScalar& operator-=(const GradedScalar& o) { return *this = *this - o; }
  GradedScalar& operator*=(const GradedScalar& o) { return *this = *this * o; }
  bool operator==(const GradedScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const GradedScalar& o) const { return !(*this == o); }

  /// Serial reference product kept alongside the parallel-capable one.
  GradedScalar mul_serial(const GradedScalar& o) const;

  /// Graded Leibniz extension of a symbol-level map. `image(id)` returns the
  /// stored image or nullptr when none is registered (an error). `op_degree`
  /// is the degree of the derivation; odd derivations pick up the usual
  /// Koszul sign on the factors they pass over.
  GradedScalar derive(const std::function<const GradedScalar*(SymId)>& image, int op_degree) const;

  /// Algebra morphism replacing symbols by same-degree elements (or zero).
  /// Symbols absent from the assignment are kept.
  GradedScalar substitute(const std::function<const GradedScalar*(SymId)>& assignment) const;

  /// Decomposition a = a0 + s*a1 for an odd generator s (so s does not occur in a0 or a1).
  std::pair<GradedScalar, GradedScalar> split_odd(SymId s) const;

  bool depends_on(SymId s) const;
  /// True when every monomial uses only symbols accepted by the predicate.
  bool supported_on(const std::function<bool(SymId)>& allowed) const;

  std::string str() const;

 private:
  TablePtr table_;
  std::vector<std::pair<Monomial, Rational>> terms_;  // sorted by monomial

  void check_same_table(const GradedScalar& o) const;
  static GradedScalar from_unsorted(TablePtr table, std::vector<std::pair<Monomial, Rational>> raw);
  friend GradedScalar mul_impl(const GradedScalar& a, const GradedScalar& b, bool parallel);
};

inline GradedScalar operator*(const Rational& c, const GradedScalar& a) { return a * c; }

/// Sign of the permutation sorting the concatenation of two sorted odd-id
/// lists; 0 if they intersect. Also emits the merged list.
int merge_odd_sign(const std::vector<SymId>& a, const std::vector<SymId>& b, std::vector<SymId>& out);

}  // namespace hgt
