#pragma once

// Seeded random inputs for the property tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "syz/branes.hpp"
#include "syz/geometry_core.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// n + 1 roots with strictly increasing moduli and random arguments.
inline syz::SurfaceSpec surface(Rng& rng, int n) {
  std::vector<std::complex<double>> roots;
  double log_r = uniform(rng, -1.0, 0.5);
  for (int i = 0; i <= n; ++i) {
    roots.push_back(std::polar(std::exp(log_r), uniform(rng, -std::numbers::pi, std::numbers::pi)));
    log_r += uniform(rng, 0.4, 1.2);
  }
  return syz::SurfaceSpec(roots);
}

// Strongly admissible path to a_i whose end lift is offset from the
// reference endpoint by w full turns. Interior vertices have s strictly
// between s_{i-1} and s_i, so no root lift can be met.
inline syz::LiftedPath strongly_admissible_path(Rng& rng, const syz::SurfaceSpec& spec, int i, int w,
                                                int max_interior = 5) {
  const syz::LiftedPath ref = syz::reference_path(spec, i);
  const double s0 = ref.front().s, s1 = ref.back().s;
  const double th0 = ref.front().theta + 2.0 * std::numbers::pi * uniform_int(rng, -2, 2);
  const double th1 = ref.back().theta + 2.0 * std::numbers::pi * w + (th0 - ref.front().theta);
  const int interior = uniform_int(rng, 0, max_interior);
  std::vector<double> ss;
  for (int k = 0; k < interior; ++k) ss.push_back(uniform(rng, s0, s1));
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
  std::vector<syz::LiftedVertex> v{{s0, th0}};
  for (double s : ss) {
    if (s <= s0 || s >= s1) continue;
    const double base = th0 + (th1 - th0) * (s - s0) / (s1 - s0);
    v.push_back({s, base + uniform(rng, -4.0, 4.0)});
  }
  v.push_back({s1, th1});
  return syz::LiftedPath(i, v);
}

}  // namespace gen
