#pragma once

// Morphism-space dimensions between the spherical objects on both sides of
// the mirror, the Euler form, and the K-theory action of the spherical twists.
//
// The Fukaya side uses the degrees of the generators r_i (0), s_i (2) and
// p_i, q_i (1). The coherent side is computed from P^1 line-bundle cohomology
// and the intersection form of the exceptional curves, so comparing the two
// is not circular.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syz/toric_mirror.hpp"

namespace syz {

/// Degree -> dimension, with zero dimensions dropped.
class GradedHom {
 public:
  GradedHom() = default;
  GradedHom(std::initializer_list<std::pair<const int, int>> dims);

  void add(int degree, int dim);
  int dim(int degree) const;
  int total() const;
  const std::map<int, int>& dims() const { return dims_; }
  std::string str() const;  ///< e.g. "{0:1, 2:1}"

  friend bool operator==(const GradedHom&, const GradedHom&) = default;

 private:
  std::map<int, int> dims_;
};

using KClass = std::vector<long long>;

GradedHom fukaya_hom(int i, int j, int n);

/// (h^0, h^1) of O(d) on P^1.
std::pair<long long, long long> line_bundle_cohomology_p1(long long d);

/// Ext^*(O_{E_i}, O_{E_j}) on the resolved A_n surface.
GradedHom bside_ext(int i, int j, int n);

using HomTable = std::function<GradedHom(int i, int j, int n)>;

/// fukaya_hom == bside_ext for all 1 <= i, j <= n.
bool hms_check(int n);
/// Same comparison against another B-side table (negative controls).
bool hms_check(int n, const HomTable& bside);

/// chi(i, j) = sum_k (-1)^k dim Ext^k(E_i, E_j).
IntMatrix euler_form(int n);

/// t_i(x) = x - chi(e_i, x) e_i.
KClass spherical_twist(int i, const KClass& x, int n);

/// Matrix of t_i acting on column vectors.
IntMatrix twist_matrix(int i, int n);

}  // namespace syz
