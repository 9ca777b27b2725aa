#pragma once

#include <Eigen/Dense>

#include <map>
#include <span>
#include <vector>

#include "groupdet/group.hpp"
#include "groupdet/polynomial.hpp"

namespace groupdet {

using ComplexMatrix = Eigen::MatrixXcd;

// Element Σ c_g·g of the group algebra of `context` (a subgroup of some
// group G, possibly G itself) with polynomial coefficients in the variables
// of `universe`. Keys are element indices of the context's parent group.
template <class C>
class GroupAlgebraElement {
 public:
  using Poly = Polynomial<C>;

  GroupAlgebraElement(Subgroup context, GroupPtr universe)
      : context_(std::move(context)), universe_(std::move(universe)) {}

  // 1·e
  static GroupAlgebraElement one(Subgroup context, GroupPtr universe) {
    GroupAlgebraElement a(std::move(context), universe);
    a.add_term(a.group().identity(), Poly::constant(universe, CoeffTraits<C>::one()));
    return a;
  }

  static GroupAlgebraElement term(Subgroup context, GroupPtr universe, int g, Poly coeff) {
    GroupAlgebraElement a(std::move(context), std::move(universe));
    a.add_term(g, std::move(coeff));
    return a;
  }

  const Subgroup& context() const { return context_; }
  const GroupPtr& universe() const { return universe_; }
  const FiniteGroup& group() const { return *context_.parent(); }
  const std::map<int, Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Poly coefficient(int g) const {
    const auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Poly(universe_) : it->second;
  }

  void add_term(int g, const Poly& coeff) {
    if (!context_.contains(g)) {
      throw ContextMismatch("element " + group().name(g) + " is outside the algebra context " +
                            context_.describe());
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(g, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    require_same_context(o);
    for (const auto& [g, p] : o.coeffs_) add_term(g, p);
    return *this;
  }

  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    require_same_context(o);
    for (const auto& [g, p] : o.coeffs_) add_term(g, -p);
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a -= b;
  }

  // Convolution: the coefficient of k is Σ_{g·h = k} a_g·b_h.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b) {
    a.require_same_context(b);
    GroupAlgebraElement r(a.context_, a.universe_);
    const auto& g = a.group();
    for (const auto& [x, p] : a.coeffs_)
      for (const auto& [y, q] : b.coeffs_) r.add_term(g.mul(x, y), p * q);
    return r;
  }

  friend GroupAlgebraElement operator*(const Poly& s, const GroupAlgebraElement& a) {
    GroupAlgebraElement r(a.context_, a.universe_);
    if (s.is_zero()) return r;
    for (const auto& [g, p] : a.coeffs_) r.add_term(g, s * p);
    return r;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // F_1: the sum of all coefficients.
  Poly flatten() const {
    Poly sum(universe_);
    for (const auto& [g, p] : coeffs_) sum += p;
    return sum;
  }

  // Same element viewed in the algebra of a larger (or equal) context.
  GroupAlgebraElement with_context(const Subgroup& context) const {
    GroupAlgebraElement r(context, universe_);
    for (const auto& [g, p] : coeffs_) r.add_term(g, p);
    return r;
  }

  void require_same_context(const GroupAlgebraElement& o) const {
    if (!(context_ == o.context_)) {
      throw ContextMismatch("group algebra contexts differ: " + context_.describe() + " vs " +
                            o.context_.describe());
    }
  }

 private:
  Subgroup context_;
  GroupPtr universe_;
  std::map<int, Poly> coeffs_;
};

// Dense rows×cols matrix over the group algebra of one context.
template <class C>
class GroupAlgebraMatrix {
 public:
  using Element = GroupAlgebraElement<C>;
  using Poly = Polynomial<C>;

  GroupAlgebraMatrix(int rows, int cols, Subgroup context, GroupPtr universe)
      : rows_(rows), cols_(cols), context_(std::move(context)), universe_(std::move(universe)) {
    entries_.assign(static_cast<std::size_t>(rows) * cols, Element(context_, universe_));
  }

  static GroupAlgebraMatrix identity(int n, Subgroup context, GroupPtr universe) {
    GroupAlgebraMatrix m(n, n, std::move(context), std::move(universe));
    for (int i = 0; i < n; ++i) m.at(i, i) = Element::one(m.context_, m.universe_);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Subgroup& context() const { return context_; }
  const GroupPtr& universe() const { return universe_; }
  const FiniteGroup& group() const { return *context_.parent(); }

  Element& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Element& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  void set(int i, int j, Element e) {
    if (!(e.context() == context_)) throw ContextMismatch("entry context differs from matrix");
    at(i, j) = std::move(e);
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend GroupAlgebraMatrix operator+(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
    a.require_conformable_sum(b);
    GroupAlgebraMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
  }

  friend GroupAlgebraMatrix operator-(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
    a.require_conformable_sum(b);
    GroupAlgebraMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
    return r;
  }

  friend GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw ShapeMismatch("cannot multiply " + a.shape() + " by " + b.shape());
    }
    if (!(a.context_ == b.context_)) throw ContextMismatch("matrix contexts differ");
    GroupAlgebraMatrix r(a.rows_, b.cols_, a.context_, a.universe_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const auto& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const auto& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend bool operator==(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  GroupAlgebraMatrix with_context(const Subgroup& context) const {
    GroupAlgebraMatrix r(rows_, cols_, context, universe_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].with_context(context);
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_conformable_sum(const GroupAlgebraMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw ShapeMismatch("cannot add " + shape() + " and " + b.shape());
    }
    if (!(context_ == b.context_)) throw ContextMismatch("matrix contexts differ");
  }

  int rows_;
  int cols_;
  Subgroup context_;
  GroupPtr universe_;
  std::vector<Element> entries_;
};

// Dense matrix of polynomials over one variable universe.
template <class C>
class ScalarMatrix {
 public:
  using Poly = Polynomial<C>;

  ScalarMatrix(int rows, int cols, GroupPtr universe)
      : rows_(rows), cols_(cols), universe_(std::move(universe)) {
    entries_.assign(static_cast<std::size_t>(rows) * cols, Poly(universe_));
  }

  static ScalarMatrix identity(int n, GroupPtr universe) {
    ScalarMatrix m(n, n, universe);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(universe, CoeffTraits<C>::one());
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const GroupPtr& universe() const { return universe_; }
  Poly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Poly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& p : entries_)
      if (!p.is_zero()) return false;
    return true;
  }

  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("cannot add matrices");
    ScalarMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
  }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("cannot multiply matrices");
    ScalarMatrix r(a.rows_, b.cols_, a.universe_ ? a.universe_ : b.universe_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  ComplexMatrix evaluate(std::span<const Complex> point) const {
    ComplexMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).template evaluate<Complex>(point);
    return m;
  }

  template <class D, class F>
  ScalarMatrix<D> map_coefficients(F&& f) const {
    ScalarMatrix<D> r(rows_, cols_, universe_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).template map_coefficients<D>(f);
    return r;
  }

 private:
  int rows_;
  int cols_;
  GroupPtr universe_;
  std::vector<Poly> entries_;
};

inline ScalarMatrix<Complex> to_complex(const ScalarMatrix<Rational>& m) {
  return m.map_coefficients<Complex>([](const Rational& c) { return Complex(c.get_d(), 0.0); });
}

// F_m: entrywise sum of group-algebra coefficients.
template <class C>
ScalarMatrix<C> flatten(const GroupAlgebraMatrix<C>& a) {
  ScalarMatrix<C> r(a.rows(), a.cols(), a.universe());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j).flatten();
  return r;
}

// Block matrix [a_ij·B] of shape (m1·m2)×(n1·n2).
template <class C>
ScalarMatrix<C> kronecker(const ScalarMatrix<C>& a, const ScalarMatrix<C>& b) {
  ScalarMatrix<C> r(a.rows() * b.rows(), a.cols() * b.cols(), a.universe() ? a.universe() : b.universe());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// Constant complex left factor, polynomial right factor.
ScalarMatrix<Complex> kronecker(const ComplexMatrix& a, const ScalarMatrix<Complex>& b);

// Scalar (polynomial) left factor, group-algebra right factor.
template <class C>
GroupAlgebraMatrix<C> kronecker(const ScalarMatrix<C>& a, const GroupAlgebraMatrix<C>& b) {
  GroupAlgebraMatrix<C> r(a.rows() * b.rows(), a.cols() * b.cols(), b.context(), b.universe());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

using RationalGAElement = GroupAlgebraElement<Rational>;
using RationalGAMatrix = GroupAlgebraMatrix<Rational>;
using RationalMatrix = ScalarMatrix<Rational>;
using ComplexPolyMatrix = ScalarMatrix<Complex>;

// α = Σ_g x_g·g over the whole group.
RationalGAElement generic_element(const GroupPtr& group);

}  // namespace groupdet
