#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "groupdet/group.hpp"
#include "groupdet/scalar.hpp"

namespace groupdet {

// Dense exponent vector, one slot per element of the variable universe.
using Monomial = std::vector<std::uint16_t>;

inline unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded lexicographic order, largest first; x_0 > x_1 > ... within a degree.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse polynomial in the variables x_g, one per element g of a fixed
// group (the universe). A default-constructed polynomial is the zero
// polynomial not yet bound to a universe; it adopts the universe of the
// other operand in arithmetic.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using Traits = CoeffTraits<C>;
  using Terms = std::map<Monomial, C, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(GroupPtr universe) : universe_(std::move(universe)) {}

  static Polynomial constant(GroupPtr universe, const C& c) {
    Polynomial p(std::move(universe));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
  }

  static Polynomial variable(GroupPtr universe, int g, const C& c = Traits::one()) {
    Polynomial p(std::move(universe));
    Monomial m(p.nvars(), 0);
    m.at(static_cast<std::size_t>(g)) = 1;
    p.add_term(std::move(m), c);
    return p;
  }

  const GroupPtr& universe() const { return universe_; }
  std::size_t nvars() const { return universe_ ? static_cast<std::size_t>(universe_->order()) : 0; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  // Adds c·m, merging with an existing term and dropping it if it cancels.
  void add_term(Monomial m, const C& c) {
    if (m.size() != nvars()) throw UniverseMismatch("exponent vector length differs from universe");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(monomial_degree(m)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (monomial_degree(m) != d) return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const C& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = Traits::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(common_universe(a, b));
    if (a.is_zero() || b.is_zero()) return r;
    Terms acc;
    Monomial m(r.nvars());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
        auto [it, inserted] = acc.try_emplace(m, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    }
    for (auto it = acc.begin(); it != acc.end();) {
      it = Traits::is_zero(it->second) ? acc.erase(it) : std::next(it);
    }
    r.terms_ = std::move(acc);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(universe_, Traits::one());
    Polynomial base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  // Substitutes values[g] for x_g. V is C itself or Complex.
  template <class V>
  V evaluate(std::span<const V> values) const {
    if (values.size() != nvars() && !terms_.empty()) {
      throw UniverseMismatch("assignment has " + std::to_string(values.size()) +
                             " values, universe has " + std::to_string(nvars()));
    }
    V sum = V(0);
    for (const auto& [m, c] : terms_) {
      V term = convert<V>(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) term *= values[i];
      sum += term;
    }
    return sum;
  }

  template <class D, class F>
  Polynomial<D> map_coefficients(F&& f) const {
    Polynomial<D> r(universe_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  // Sorted graded-lex, variables printed as x[name].
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = Traits::is_negative(c);
      C magnitude = negative ? C(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string vars;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!vars.empty()) vars += "*";
        vars += "x[" + universe_->name(static_cast<int>(i)) + "]";
        if (m[i] > 1) vars += "^" + std::to_string(m[i]);
      }
      const bool unit = magnitude == Traits::one();
      if (vars.empty()) {
        out += Traits::to_string(magnitude);
      } else if (unit) {
        out += vars;
      } else {
        out += Traits::to_string(magnitude) + "*" + vars;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (a.universe_ && b.universe_ && a.universe_ != b.universe_ &&
        !a.universe_->same_table(*b.universe_)) {
      return false;
    }
    return a.terms_ == b.terms_;
  }

  static GroupPtr common_universe(const Polynomial& a, const Polynomial& b) {
    if (!a.universe_) return b.universe_;
    if (!b.universe_ || a.universe_ == b.universe_) return a.universe_;
    if (!a.universe_->same_table(*b.universe_)) {
      throw UniverseMismatch("polynomials live in different variable universes");
    }
    return a.universe_;
  }

 private:
  template <class V>
  static V convert(const C& c) {
    if constexpr (std::is_same_v<V, C>) {
      return c;
    } else {
      return V(Traits::to_complex(c));
    }
  }

  void adopt(const Polynomial& o) { universe_ = common_universe(*this, o); }

  GroupPtr universe_;
  Terms terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using ComplexPolynomial = Polynomial<Complex>;

inline ComplexPolynomial to_complex(const RationalPolynomial& p) {
  return p.map_coefficients<Complex>([](const Rational& c) { return Complex(c.get_d(), 0.0); });
}

}  // namespace groupdet
