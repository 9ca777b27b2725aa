#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>

namespace groupdet {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Tunable numeric thresholds. Every tolerance in the library is read from
// one of these fields; nothing downstream hard-codes a magnitude.
struct NumericDefaults {
  // Complex coefficients with magnitude below this are dropped.
  static constexpr double kPruneThreshold = 1e-12;
  // Gaussian-integer rounding window for symbolic verification.
  static constexpr double kRoundingWindow = 1e-6;
  // Default relative tolerance of randomized identity tests.
  static constexpr double kPitTolerance = 1e-8;
};

// Coefficient-ring operations needed by the polynomial and matrix
// templates. Only Rational (exact) and Complex (double precision) exist.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static constexpr bool kExact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static Complex to_complex(const Rational& c) { return {c.get_d(), 0.0}; }
  static std::string to_string(const Rational& c) { return c.get_str(); }
  static bool is_negative(const Rational& c) { return sgn(c) < 0; }
};

template <>
struct CoeffTraits<Complex> {
  static constexpr bool kExact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& c) {
    return std::abs(c) < NumericDefaults::kPruneThreshold;
  }
  static Complex to_complex(const Complex& c) { return c; }
  static std::string to_string(const Complex& c);
  // Printed with a leading minus sign when purely real and negative.
  static bool is_negative(const Complex& c) { return c.imag() == 0.0 && c.real() < 0.0; }
};

inline Rational make_rational(long num, long den = 1) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

}  // namespace groupdet
