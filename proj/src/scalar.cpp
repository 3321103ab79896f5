#include "heckelab/scalar.hpp"

namespace heckelab {

std::string scalar_to_string(const Scalar& value) {
  if (value.im == 0) return rational_to_string(value.re);
  std::string imag = rational_to_string(value.im) + "i";
  if (value.re == 0) return imag;
  if (value.im > 0) return rational_to_string(value.re) + "+" + imag;
  return rational_to_string(value.re) + imag;  // sign already on the numerator
}

}  // namespace heckelab
