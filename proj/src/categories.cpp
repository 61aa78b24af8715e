#include "syz/categories.hpp"

#include <algorithm>
#include <cstdlib>

#include "syz/error.hpp"

namespace syz {

namespace {

void check_pair(int i, int j, int n) {
  if (n < 1) throw InputError("n must be >= 1");
  if (i < 1 || j < 1 || i > n || j > n) throw InputError("object index out of range 1..n");
}

}  // namespace

GradedHom::GradedHom(std::initializer_list<std::pair<const int, int>> dims) {
  for (const auto& [degree, dim] : dims) add(degree, dim);
}

void GradedHom::add(int degree, int dim) {
  if (dim < 0) throw InputError("dimensions are nonnegative");
  if (dim == 0) return;
  dims_[degree] += dim;
}

int GradedHom::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

int GradedHom::total() const {
  int sum = 0;
  for (const auto& entry : dims_) sum += entry.second;
  return sum;
}

std::string GradedHom::str() const {
  std::string out = "{";
  for (const auto& [degree, dim] : dims_) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(degree) + ":" + std::to_string(dim);
  }
  return out + "}";
}

GradedHom fukaya_hom(int i, int j, int n) {
  check_pair(i, j, n);
  if (i == j) return {{0, 1}, {2, 1}};
  if (std::abs(i - j) == 1) return {{1, 1}};
  return {};
}

std::pair<long long, long long> line_bundle_cohomology_p1(long long d) {
  return {std::max(d + 1, 0LL), std::max(-d - 1, 0LL)};
}

GradedHom bside_ext(int i, int j, int n) {
  check_pair(i, j, n);
  const IntMatrix form = intersection_matrix(n);
  const long long e = form[i - 1][j - 1];
  GradedHom ext;
  if (i == j) {
    // Local-to-global: Ext^k(O_E, O_E) = H^k(O_E) + H^{k-1}(N_E), N_E = O(E.E).
    const auto [h0, h1] = line_bundle_cohomology_p1(0);
    const auto [n0, n1] = line_bundle_cohomology_p1(e);
    ext.add(0, static_cast<int>(h0));
    ext.add(1, static_cast<int>(h1 + n0));
    ext.add(2, static_cast<int>(n1));
    return ext;
  }
  // Distinct curves meeting transversally: the Koszul resolution at each
  // intersection point contributes one class in degree 1.
  ext.add(1, static_cast<int>(e));
  return ext;
}

bool hms_check(int n) { return hms_check(n, bside_ext); }

bool hms_check(int n, const HomTable& bside) {
  if (n < 1) throw InputError("n must be >= 1");
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!(fukaya_hom(i, j, n) == bside(i, j, n))) return false;
    }
  }
  return true;
}

IntMatrix euler_form(int n) {
  if (n < 1) throw InputError("n must be >= 1");
  IntMatrix chi(n, std::vector<long long>(n, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GradedHom ext = bside_ext(i, j, n);
      long long sum = 0;
      for (const auto& [degree, dim] : ext.dims()) sum += (degree % 2 == 0 ? 1 : -1) * dim;
      chi[i - 1][j - 1] = sum;
    }
  }
  return chi;
}

KClass spherical_twist(int i, const KClass& x, int n) {
  if (n < 1 || i < 1 || i > n) throw InputError("twist index out of range 1..n");
  if (x.size() != static_cast<std::size_t>(n)) throw InputError("K-class must have n coordinates");
  const IntMatrix chi = euler_form(n);
  long long pairing = 0;
  for (int j = 0; j < n; ++j) pairing += chi[i - 1][j] * x[j];
  KClass y = x;
  y[i - 1] -= pairing;
  return y;
}

IntMatrix twist_matrix(int i, int n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    KClass e(n, 0);
    e[j] = 1;
    const KClass image = spherical_twist(i, e, n);
    for (int r = 0; r < n; ++r) m[r][j] = image[r];
  }
  return m;
}

}  // namespace syz
