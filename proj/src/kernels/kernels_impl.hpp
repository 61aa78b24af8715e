#pragma once

#include "syz/kernels.hpp"

namespace syz::kernels {

namespace scalar {
double max_symplectic_pairing(const TangentPairs& b);
double max_abs_difference(std::span<const double> a, std::span<const double> b);
double max_hypot(std::span<const double> a, std::span<const double> b);
void moment_map(ComplexSpan u, ComplexSpan v, std::span<double> out);
void corrected_gluing(bool plus_region, ComplexSpan v, ComplexSpan w, MutableComplexSpan out);
}  // namespace scalar

#ifdef SYZ_HAVE_AVX2
namespace avx2 {
double max_symplectic_pairing(const TangentPairs& b);
double max_abs_difference(std::span<const double> a, std::span<const double> b);
double max_hypot(std::span<const double> a, std::span<const double> b);
void moment_map(ComplexSpan u, ComplexSpan v, std::span<double> out);
void corrected_gluing(bool plus_region, ComplexSpan v, ComplexSpan w, MutableComplexSpan out);
}  // namespace avx2
#endif

}  // namespace syz::kernels
