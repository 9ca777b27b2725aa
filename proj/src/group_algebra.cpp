#include <cmath>
#include <utility>

#include "groupdet/determinant.hpp"
#include "groupdet/group_algebra.hpp"

namespace groupdet {

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

ScalarMatrix<Complex> kronecker(const ComplexMatrix& a, const ScalarMatrix<Complex>& b) {
  ScalarMatrix<Complex> r(static_cast<int>(a.rows()) * b.rows(),
                          static_cast<int>(a.cols()) * b.cols(), b.universe());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex s = a(i, j);
      if (CoeffTraits<Complex>::is_zero(s)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) r.at(i * b.rows() + k, j * b.cols() + l) = b.at(k, l) * s;
    }
  return r;
}

RationalGAElement generic_element(const GroupPtr& group) {
  RationalGAElement alpha(Subgroup::whole(group), group);
  for (int g = 0; g < group->order(); ++g) alpha.add_term(g, RationalPolynomial::variable(group, g));
  return alpha;
}

Complex det_numeric(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of non-square matrix");
  ComplexMatrix lu = m;
  const Eigen::Index n = lu.rows();
  Complex det{1.0, 0.0};
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    if (lu(pivot, k) == Complex(0.0, 0.0)) return {0.0, 0.0};
    if (pivot != k) {
      lu.row(k).swap(lu.row(pivot));
      det = -det;
    }
    const Complex p = lu(k, k);
    det *= p;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / p;
      if (f == Complex(0.0, 0.0)) continue;
      lu.row(i).tail(n - k - 1) -= f * lu.row(k).tail(n - k - 1);
    }
  }
  return det;
}

}  // namespace groupdet
