#pragma once

// Data-parallel inner loops used by the numeric checks.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is picked once at runtime from CPUID; setting the
// environment variable SYZ_SIMD=scalar forces the reference path. Both
// variants evaluate the same expressions in the same order without fused
// multiply-add, so their results are bit-identical (checked in
// tests/test_kernels.cpp).

#include <cstddef>
#include <span>
#include <string_view>

namespace syz::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set supported by this build and this CPU.
Isa detected_isa();

/// detected_isa() unless SYZ_SIMD=scalar is set in the environment.
Isa active_isa();

/// Structure-of-arrays batch of tangent-vector pairs (X_t, X_a) at points of
/// Y, with 1/|z|^2 at each point. All spans must have the same length.
struct TangentPairs {
  std::span<const double> ut_re, ut_im, ua_re, ua_im;
  std::span<const double> vt_re, vt_im, va_re, va_im;
  std::span<const double> zt_re, zt_im, za_re, za_im;
  std::span<const double> inv_abs_z2;
};

/// Batch of complex numbers in split real/imaginary form.
struct ComplexSpan {
  std::span<const double> re, im;
};
struct MutableComplexSpan {
  std::span<double> re, im;
};

struct KernelTable {
  /// max_k |omega(X_t, X_a)| with
  /// omega = -(i/2)(du^dbar u + dv^dbar v + dz^dbar z/|z|^2).
  double (*max_symplectic_pairing)(const TangentPairs& batch);
  /// max_k |a_k - b_k|.
  double (*max_abs_difference)(std::span<const double> a, std::span<const double> b);
  /// max_k hypot(a_k, b_k).
  double (*max_hypot)(std::span<const double> a, std::span<const double> b);
  /// out_k = (|u_k|^2 - |v_k|^2) / 2.
  void (*moment_map)(ComplexSpan u, ComplexSpan v, std::span<double> out);
  /// u_k = v_k^{-1}(1 + w_k)   when plus_region,
  /// u_k = v_k^{-1} w_k (1 + w_k^{-1}) otherwise.
  /// The same formulas send u to v, so this is also the inverse gluing.
  void (*corrected_gluing)(bool plus_region, ComplexSpan v, ComplexSpan w, MutableComplexSpan out);
};

const KernelTable& table(Isa isa);

inline const KernelTable& active() { return table(active_isa()); }

}  // namespace syz::kernels
