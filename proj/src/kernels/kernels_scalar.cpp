#include "kernels_impl.hpp"

#include <algorithm>
#include <cmath>

namespace syz::kernels::scalar {

double max_symplectic_pairing(const TangentPairs& b) {
  double best = 0.0;
  const std::size_t count = b.inv_abs_z2.size();
  for (std::size_t k = 0; k < count; ++k) {
    const double wu = b.ut_re[k] * b.ua_im[k] - b.ut_im[k] * b.ua_re[k];
    const double wv = b.vt_re[k] * b.va_im[k] - b.vt_im[k] * b.va_re[k];
    const double wz = (b.zt_re[k] * b.za_im[k] - b.zt_im[k] * b.za_re[k]) * b.inv_abs_z2[k];
    best = std::max(best, std::fabs((wu + wv) + wz));
  }
  return best;
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::fabs(a[k] - b[k]));
  return best;
}

double max_hypot(std::span<const double> a, std::span<const double> b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    best = std::max(best, std::sqrt(a[k] * a[k] + b[k] * b[k]));
  }
  return best;
}

void moment_map(ComplexSpan u, ComplexSpan v, std::span<double> out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double nu = u.re[k] * u.re[k] + u.im[k] * u.im[k];
    const double nv = v.re[k] * v.re[k] + v.im[k] * v.im[k];
    out[k] = 0.5 * (nu - nv);
  }
}

namespace {

// (a + bi)^{-1} by the textbook formula; the AVX2 variant uses the same one.
inline void reciprocal(double a, double b, double& re, double& im) {
  const double d = a * a + b * b;
  re = a / d;
  im = 0.0 - b / d;
}

inline void multiply(double a, double b, double c, double d, double& re, double& im) {
  re = a * c - b * d;
  im = a * d + b * c;
}

}  // namespace

void corrected_gluing(bool plus_region, ComplexSpan v, ComplexSpan w, MutableComplexSpan out) {
  const std::size_t count = out.re.size();
  for (std::size_t k = 0; k < count; ++k) {
    double iv_re, iv_im;
    reciprocal(v.re[k], v.im[k], iv_re, iv_im);
    double f_re, f_im;
    if (plus_region) {
      f_re = 1.0 + w.re[k];
      f_im = w.im[k];
    } else {
      double iw_re, iw_im;
      reciprocal(w.re[k], w.im[k], iw_re, iw_im);
      multiply(w.re[k], w.im[k], 1.0 + iw_re, iw_im, f_re, f_im);
    }
    multiply(iv_re, iv_im, f_re, f_im, out.re[k], out.im[k]);
  }
}

}  // namespace syz::kernels::scalar
