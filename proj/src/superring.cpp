#include "hgt/superring.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hgt {

bool Monomial::contains(SymId s, bool is_odd) const {
  const auto& v = is_odd ? odd : even;
  return std::binary_search(v.begin(), v.end(), s);
}

std::string Monomial::str(const GeneratorTable& t) const {
  if (empty()) return "1";
  std::string out;
  bool first = true;
  auto emit = [&](SymId s) {
    if (!first) out += "*";
    out += t.name(s);
    first = false;
  };
  for (SymId s : odd) emit(s);
  for (SymId s : even) emit(s);
  return out;
}

int merge_odd_sign(const std::vector<SymId>& a, const std::vector<SymId>& b, std::vector<SymId>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  size_t remaining_a = a.size();
  long swaps = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;  // odd square
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
      --remaining_a;
    } else {
      // b[j] passes over every remaining factor of a
      swaps += static_cast<long>(remaining_a);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return (swaps & 1) ? -1 : 1;
}

GradedScalar::GradedScalar(TablePtr table, const Rational& c) : table_(std::move(table)) {
  if (!table_) throw error("GradedScalar requires a generator table");
  if (c != 0) terms_.push_back({Monomial{}, c});
}

GradedScalar GradedScalar::generator(TablePtr table, SymId id) {
  GradedScalar g(table);
  Monomial m;
  if (table->odd(id))
    m.odd.push_back(id);
  else
    m.even.push_back(id);
  g.terms_.push_back({std::move(m), Rational(1)});
  return g;
}

void GradedScalar::check_same_table(const GradedScalar& o) const {
  if (table_.get() != o.table_.get()) throw error("generator table mismatch");
}

int GradedScalar::degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.front().first.degree(*table_);
  for (const auto& [m, c] : terms_)
    if (m.degree(*table_) != d) throw error("degree() on inhomogeneous element");
  return d;
}

bool GradedScalar::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().first.degree(*table_);
  for (const auto& [m, c] : terms_)
    if (m.degree(*table_) != d) return false;
  return true;
}

bool GradedScalar::is_homogeneous_of(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.degree(*table_) != d) return false;
  return true;
}

GradedScalar GradedScalar::part_of_degree(int d) const {
  GradedScalar out(table_);
  for (const auto& [m, c] : terms_)
    if (m.degree(*table_) == d) out.terms_.push_back({m, c});
  return out;
}

int GradedScalar::parity_sign() const {
  if (is_zero()) return 1;
  return (degree() & 1) ? -1 : 1;
}

GradedScalar GradedScalar::operator-() const {
  GradedScalar out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GradedScalar GradedScalar::operator+(const GradedScalar& o) const {
  if (!table_) return o;
  if (!o.table_) return *this;
  check_same_table(o);
  GradedScalar out(table_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.terms_.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    } else if (terms_[i].first < o.terms_[j].first) {
      out.terms_.push_back(terms_[i++]);
    } else {
      out.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
  return out;
}

GradedScalar GradedScalar::operator-(const GradedScalar& o) const { return *this + (-o); }

GradedScalar GradedScalar::operator*(const Rational& c) const {
  if (c == 0) return GradedScalar(table_);
  GradedScalar out = *this;
  for (auto& [m, k] : out.terms_) k *= c;
  return out;
}

GradedScalar GradedScalar::from_unsorted(TablePtr table, std::vector<std::pair<Monomial, Rational>> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  GradedScalar out(std::move(table));
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first)
      out.terms_.back().second += t.second;
    else
      out.terms_.push_back(std::move(t));
  }
  out.terms_.erase(std::remove_if(out.terms_.begin(), out.terms_.end(),
                                  [](const auto& t) { return t.second == 0; }),
                   out.terms_.end());
  return out;
}

namespace {

void mul_term(const GeneratorTable& table, int truncation,
              const std::pair<Monomial, Rational>& ta, const std::pair<Monomial, Rational>& tb,
              std::vector<std::pair<Monomial, Rational>>& sink) {
  Monomial m;
  int sign = merge_odd_sign(ta.first.odd, tb.first.odd, m.odd);
  if (sign == 0) return;
  m.even.resize(ta.first.even.size() + tb.first.even.size());
  std::merge(ta.first.even.begin(), ta.first.even.end(), tb.first.even.begin(), tb.first.even.end(),
             m.even.begin());
  if (m.degree(table) > truncation) return;
  Rational c = ta.second * tb.second;
  if (sign < 0) c = -c;
  sink.push_back({std::move(m), std::move(c)});
}

}  // namespace

GradedScalar mul_impl(const GradedScalar& a, const GradedScalar& b, bool parallel) {
  a.check_same_table(b);
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const GeneratorTable& table = *a.table();
  const int truncation = table.truncation();
  std::vector<std::pair<Monomial, Rational>> raw;

#ifdef _OPENMP
  const size_t work = ta.size() * tb.size();
  if (parallel && work >= 4096) {
    std::vector<std::vector<std::pair<Monomial, Rational>>> local;
#pragma omp parallel
    {
#pragma omp single
      local.resize(static_cast<size_t>(omp_get_num_threads()));
      auto& sink = local[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (long i = 0; i < static_cast<long>(ta.size()); ++i)
        for (size_t j = 0; j < tb.size(); ++j)
          mul_term(table, truncation, ta[static_cast<size_t>(i)], tb[j], sink);
    }
    size_t total = 0;
    for (const auto& v : local) total += v.size();
    raw.reserve(total);
    for (auto& v : local) raw.insert(raw.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    return GradedScalar::from_unsorted(a.table(), std::move(raw));
  }
#else
  (void)parallel;
#endif

  raw.reserve(ta.size() * tb.size());
  for (const auto& x : ta)
    for (const auto& y : tb) mul_term(table, truncation, x, y, raw);
  return GradedScalar::from_unsorted(a.table(), std::move(raw));
}

GradedScalar GradedScalar::operator*(const GradedScalar& o) const { return mul_impl(*this, o, true); }

GradedScalar GradedScalar::mul_serial(const GradedScalar& o) const { return mul_impl(*this, o, false); }

GradedScalar GradedScalar::derive(const std::function<const GradedScalar*(SymId)>& image, int op_degree) const {
  GradedScalar out(table_);
  const bool odd_op = op_degree & 1;
  for (const auto& [m, coeff] : terms_) {
    // canonical factor sequence: odd ids then even ids
    std::vector<SymId> factors;
    factors.reserve(m.odd.size() + m.even.size());
    factors.insert(factors.end(), m.odd.begin(), m.odd.end());
    factors.insert(factors.end(), m.even.begin(), m.even.end());
    int prefix_degree = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      const GradedScalar* img = image(factors[i]);
      if (!img) throw error("no derivation image registered for symbol " + table_->name(factors[i]));
      if (!img->is_zero()) {
        if (!img->is_homogeneous_of(table_->degree(factors[i]) + op_degree))
          throw error("derivation image degree mismatch for symbol " + table_->name(factors[i]));
        // prefix
        Monomial pre;
        for (size_t k = 0; k < i; ++k) {
          SymId s = factors[k];
          if (table_->odd(s))
            pre.odd.push_back(s);
          else
            pre.even.push_back(s);
        }
        std::sort(pre.even.begin(), pre.even.end());
        GradedScalar pre_s(table_);
        pre_s.terms_.push_back({std::move(pre), Rational(1)});
        // suffix
        Monomial suf;
        for (size_t k = i + 1; k < factors.size(); ++k) {
          SymId s = factors[k];
          if (table_->odd(s))
            suf.odd.push_back(s);
          else
            suf.even.push_back(s);
        }
        std::sort(suf.even.begin(), suf.even.end());
        GradedScalar suf_s(table_);
        suf_s.terms_.push_back({std::move(suf), Rational(1)});
        GradedScalar piece = pre_s * (*img) * suf_s * coeff;
        if (odd_op && (prefix_degree & 1)) piece = -piece;
        out += piece;
      }
      prefix_degree += table_->degree(factors[i]);
    }
  }
  return out;
}

GradedScalar GradedScalar::substitute(const std::function<const GradedScalar*(SymId)>& assignment) const {
  GradedScalar out(table_);
  for (const auto& [m, coeff] : terms_) {
    GradedScalar term(table_, coeff);
    bool dead = false;
    auto apply = [&](SymId s) {
      if (dead) return;
      const GradedScalar* img = assignment(s);
      if (!img) {
        term = term * generator(table_, s);
      } else {
        if (!img->is_zero() && !img->is_homogeneous_of(table_->degree(s)))
          throw error("substitution image degree mismatch for symbol " + table_->name(s));
        term = term * (*img);
      }
      if (term.is_zero()) dead = true;
    };
    for (SymId s : m.odd) apply(s);
    for (SymId s : m.even) apply(s);
    if (!dead) out += term;
  }
  return out;
}

std::pair<GradedScalar, GradedScalar> GradedScalar::split_odd(SymId s) const {
  if (!table_->odd(s)) throw error("split_odd requires an odd symbol");
  GradedScalar a0(table_), a1(table_);
  for (const auto& [m, c] : terms_) {
    auto it = std::lower_bound(m.odd.begin(), m.odd.end(), s);
    if (it == m.odd.end() || *it != s) {
      a0.terms_.push_back({m, c});
    } else {
      size_t pos = static_cast<size_t>(it - m.odd.begin());
      Monomial rest = m;
      rest.odd.erase(rest.odd.begin() + static_cast<long>(pos));
      Rational cc = (pos & 1) ? -c : c;  // move s to the front across pos odd factors
      a1.terms_.push_back({std::move(rest), std::move(cc)});
    }
  }
  std::sort(a1.terms_.begin(), a1.terms_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return {a0, a1};
}

bool GradedScalar::depends_on(SymId s) const {
  bool is_odd = table_->odd(s);
  for (const auto& [m, c] : terms_)
    if (m.contains(s, is_odd)) return true;
  return false;
}

bool GradedScalar::supported_on(const std::function<bool(SymId)>& allowed) const {
  for (const auto& [m, c] : terms_) {
    for (SymId s : m.odd)
      if (!allowed(s)) return false;
    for (SymId s : m.even)
      if (!allowed(s)) return false;
  }
  return true;
}

std::string GradedScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c << ")";
    if (!m.empty()) os << "*" << m.str(*table_);
    first = false;
  }
  return os.str();
}

}  // namespace hgt
