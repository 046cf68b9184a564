#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spectral/ensembles.hpp"

namespace spectral::paths {

enum class Step : std::uint8_t { up, level, down };

// A lattice path from (0,0) to (k,0) over {up, down, level}.  Alternating
// paths (length 2k) may only go down/level on odd-numbered steps and up/level
// on even-numbered ones; they index the Gram-matrix trace expansion, plain
// paths the tridiagonal one.
struct LatticePath {
  std::vector<Step> steps;
  bool alternating = false;
};

// Per-level tallies of a path: level_steps[j] counts level steps at height j
// (a_j, resp. c_j), down_steps[j] counts down steps j -> j-1 (b_j, resp.
// d_j).  min_level/max_level record the deepest descent and highest ascent.
struct PathProfile {
  std::map<int, int> level_steps;
  std::map<int, int> down_steps;
  int min_level = 0;
  int max_level = 0;
};

// Enumeration blows up exponentially; these are the largest path classes the
// deviation formulas are allowed to request.
inline constexpr int kMaxPlainOrder = 12;
inline constexpr int kMaxAlternatingOrder = 10;

// All paths in P_{r,k} (plain) or Q_{r,k} (alternating) with exactly r down
// steps.  |P_{r,k}| = k!/(r! r! (k-2r)!), |Q_{r,k}| = C(k,r)^2.
std::vector<LatticePath> enumerate_paths(int k, int r, bool alternating);

PathProfile profile(const LatticePath& path);

// p_{r,k,i} resp. q_{r,k,i}: paths of the family that descend to, but not
// below, level -i.
std::int64_t descent_class_count(int k, int r, int i, bool alternating);

// Aggregated path statistics entering the deviation formula, cached per
// (k, r, family).  All are exact integers.
struct ClassSums {
  std::int64_t count = 0;         // |P_{r,k}| or |Q_{r,k}|
  std::int64_t descent_sum = 0;   // sum over paths of the descent depth
  std::int64_t ascent_sum = 0;    // sum over paths of the max ascent
  std::int64_t level_moment = 0;  // sum of j * a_j  (f'-term weight)
  std::int64_t down_moment = 0;   // sum of j * b_j  (g'-term weight)
  std::int64_t level_pairs = 0;   // sum of C(a_j, 2)  (sigma^2 weight)
  std::int64_t down_pairs = 0;    // sum of C(2 b_j, 2)  (eta^2 weight)
  std::vector<std::int64_t> descent_histogram;  // [i] = p_{r,k,i}
};

const ClassSums& class_sums(int k, int r, bool alternating);

// m_k (tridiagonal) or m-tilde_k (bidiagonal Gram) of the profile model:
// the asymptotic moments of the level density.
double general_moment(int k, const GeneralModelSpec& spec);

// First-order deviation mu_i of E[tr(M^i)] from n * m_i: edge exclusions,
// Riemann-sum endpoint terms, profile-slope integrals, and the noise-variance
// second-order terms, each weighted by the path-class sums above.
double general_deviation(int i, const GeneralModelSpec& spec);

// Limiting covariance of the centered trace powers (tr(M^i), tr(M^j)).
double general_covariance(int i, int j, const GeneralModelSpec& spec);

}  // namespace spectral::paths
