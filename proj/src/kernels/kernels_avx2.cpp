// Compiled with -mavx2 (and deliberately without -mfma).

#include "kernels_impl.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace syz::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

inline double horizontal_max(__m256d x) {
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, x);
  return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

inline __m256d load(std::span<const double> s, std::size_t k) { return _mm256_loadu_pd(s.data() + k); }

}  // namespace

double max_symplectic_pairing(const TangentPairs& b) {
  const std::size_t count = b.inv_abs_z2.size();
  __m256d best = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + kLanes <= count; k += kLanes) {
    const __m256d wu = _mm256_sub_pd(_mm256_mul_pd(load(b.ut_re, k), load(b.ua_im, k)),
                                     _mm256_mul_pd(load(b.ut_im, k), load(b.ua_re, k)));
    const __m256d wv = _mm256_sub_pd(_mm256_mul_pd(load(b.vt_re, k), load(b.va_im, k)),
                                     _mm256_mul_pd(load(b.vt_im, k), load(b.va_re, k)));
    const __m256d wz0 = _mm256_sub_pd(_mm256_mul_pd(load(b.zt_re, k), load(b.za_im, k)),
                                      _mm256_mul_pd(load(b.zt_im, k), load(b.za_re, k)));
    const __m256d wz = _mm256_mul_pd(wz0, load(b.inv_abs_z2, k));
    best = _mm256_max_pd(best, abs_pd(_mm256_add_pd(_mm256_add_pd(wu, wv), wz)));
  }
  double result = horizontal_max(best);
  if (k < count) {
    TangentPairs tail{b.ut_re.subspan(k), b.ut_im.subspan(k), b.ua_re.subspan(k), b.ua_im.subspan(k),
                      b.vt_re.subspan(k), b.vt_im.subspan(k), b.va_re.subspan(k), b.va_im.subspan(k),
                      b.zt_re.subspan(k), b.zt_im.subspan(k), b.za_re.subspan(k), b.za_im.subspan(k),
                      b.inv_abs_z2.subspan(k)};
    result = std::max(result, scalar::max_symplectic_pairing(tail));
  }
  return result;
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  __m256d best = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + kLanes <= a.size(); k += kLanes) {
    best = _mm256_max_pd(best, abs_pd(_mm256_sub_pd(load(a, k), load(b, k))));
  }
  return std::max(horizontal_max(best), scalar::max_abs_difference(a.subspan(k), b.subspan(k)));
}

double max_hypot(std::span<const double> a, std::span<const double> b) {
  __m256d best = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + kLanes <= a.size(); k += kLanes) {
    const __m256d x = load(a, k);
    const __m256d y = load(b, k);
    const __m256d r = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)));
    best = _mm256_max_pd(best, r);
  }
  return std::max(horizontal_max(best), scalar::max_hypot(a.subspan(k), b.subspan(k)));
}

void moment_map(ComplexSpan u, ComplexSpan v, std::span<double> out) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t k = 0;
  for (; k + kLanes <= out.size(); k += kLanes) {
    const __m256d ur = load(u.re, k), ui = load(u.im, k);
    const __m256d vr = load(v.re, k), vi = load(v.im, k);
    const __m256d nu = _mm256_add_pd(_mm256_mul_pd(ur, ur), _mm256_mul_pd(ui, ui));
    const __m256d nv = _mm256_add_pd(_mm256_mul_pd(vr, vr), _mm256_mul_pd(vi, vi));
    _mm256_storeu_pd(out.data() + k, _mm256_mul_pd(half, _mm256_sub_pd(nu, nv)));
  }
  if (k < out.size()) {
    scalar::moment_map({u.re.subspan(k), u.im.subspan(k)}, {v.re.subspan(k), v.im.subspan(k)}, out.subspan(k));
  }
}

void corrected_gluing(bool plus_region, ComplexSpan v, ComplexSpan w, MutableComplexSpan out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const std::size_t count = out.re.size();
  std::size_t k = 0;
  for (; k + kLanes <= count; k += kLanes) {
    const __m256d vr = load(v.re, k), vi = load(v.im, k);
    const __m256d wr = load(w.re, k), wi = load(w.im, k);
    const __m256d dv = _mm256_add_pd(_mm256_mul_pd(vr, vr), _mm256_mul_pd(vi, vi));
    const __m256d ivr = _mm256_div_pd(vr, dv);
    const __m256d ivi = _mm256_sub_pd(_mm256_setzero_pd(), _mm256_div_pd(vi, dv));
    __m256d fr, fi;
    if (plus_region) {
      fr = _mm256_add_pd(one, wr);
      fi = wi;
    } else {
      const __m256d dw = _mm256_add_pd(_mm256_mul_pd(wr, wr), _mm256_mul_pd(wi, wi));
      const __m256d iwr = _mm256_div_pd(wr, dw);
      const __m256d iwi = _mm256_sub_pd(_mm256_setzero_pd(), _mm256_div_pd(wi, dw));
      const __m256d gr = _mm256_add_pd(one, iwr);
      fr = _mm256_sub_pd(_mm256_mul_pd(wr, gr), _mm256_mul_pd(wi, iwi));
      fi = _mm256_add_pd(_mm256_mul_pd(wr, iwi), _mm256_mul_pd(wi, gr));
    }
    _mm256_storeu_pd(out.re.data() + k, _mm256_sub_pd(_mm256_mul_pd(ivr, fr), _mm256_mul_pd(ivi, fi)));
    _mm256_storeu_pd(out.im.data() + k, _mm256_add_pd(_mm256_mul_pd(ivr, fi), _mm256_mul_pd(ivi, fr)));
  }
  if (k < count) {
    scalar::corrected_gluing(plus_region, {v.re.subspan(k), v.im.subspan(k)}, {w.re.subspan(k), w.im.subspan(k)},
                             {out.re.subspan(k), out.im.subspan(k)});
  }
}

}  // namespace syz::kernels::avx2
