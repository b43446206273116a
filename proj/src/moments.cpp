#include "ladder/moments.hpp"

namespace ladder {

ExactComplex gaussian_moment_1d(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("gaussian_moment_1d: negative exponent");
  if (k != l) return ExactComplex::zero();
  return ExactComplex(factorial_int(k));
}

ExactComplex ball_moment(const MultiIndex& eta, const MultiIndex& gamma, int q) {
  if (eta.size() != q || gamma.size() != q)
    throw std::invalid_argument("ball_moment: exponent length mismatch");
  if (eta != gamma) return ExactComplex::zero();
  return ExactComplex(rat_frac(eta.factorial(), factorial_int(eta.order() + q)));
}

}  // namespace ladder
