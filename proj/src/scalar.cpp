#include "groupdet/scalar.hpp"

#include <cstdio>

namespace groupdet {

std::string CoeffTraits<Complex>::to_string(const Complex& c) {
  char buf[64];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", c.real());
  } else if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12gi", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
  }
  return buf;
}

}  // namespace groupdet
