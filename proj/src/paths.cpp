#include "spectral/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "spectral/quadrature.hpp"
#include "spectral/rational.hpp"

namespace spectral::paths {
namespace {

void check_family_args(int k, int r, bool alternating) {
  if (k < 0) throw std::domain_error("paths: negative path order");
  const int limit = alternating ? kMaxAlternatingOrder : kMaxPlainOrder;
  if (k > limit)
    throw std::length_error("paths: enumeration of order " + std::to_string(k) +
                            " exceeds the " + (alternating ? "alternating" : "plain") +
                            " limit of " + std::to_string(limit));
  const int r_max = alternating ? k : k / 2;
  if (r < 0 || r > r_max)
    throw std::domain_error("paths: down-step count " + std::to_string(r) +
                            " outside [0, " + std::to_string(r_max) + "]");
}

// Depth-first enumeration over step choices.  Plain paths have length k and
// free step order; alternating ones have length 2k with down/level forced on
// even 0-based indices and up/level on odd ones.
void enumerate_into(int length, int ups_left, int downs_left, bool alternating,
                    LatticePath& partial, std::vector<LatticePath>& out) {
  const int pos = static_cast<int>(partial.steps.size());
  if (pos == length) {
    if (ups_left == 0 && downs_left == 0) out.push_back(partial);
    return;
  }
  const int remaining = length - pos - 1;  // slots left after this placement
  auto try_step = [&](Step s, int u, int d) {
    if (u + d > remaining) return;
    partial.steps.push_back(s);
    enumerate_into(length, u, d, alternating, partial, out);
    partial.steps.pop_back();
  };
  const bool down_allowed = !alternating || pos % 2 == 0;
  const bool up_allowed = !alternating || pos % 2 == 1;
  if (up_allowed && ups_left > 0) try_step(Step::up, ups_left - 1, downs_left);
  try_step(Step::level, ups_left, downs_left);
  if (down_allowed && downs_left > 0) try_step(Step::down, ups_left, downs_left - 1);
}

struct ClassKey {
  int k;
  int r;
  bool alternating;
  friend bool operator<(const ClassKey& a, const ClassKey& b) {
    return std::tie(a.k, a.r, a.alternating) < std::tie(b.k, b.r, b.alternating);
  }
};

std::shared_mutex cache_mutex;
std::map<ClassKey, ClassSums> cache;  // std::map: stable references across inserts

ClassSums compute_class_sums(int k, int r, bool alternating) {
  ClassSums sums;
  sums.descent_histogram.assign(static_cast<std::size_t>(r) + 1, 0);
  for (const LatticePath& path : enumerate_paths(k, r, alternating)) {
    const PathProfile prof = profile(path);
    ++sums.count;
    sums.descent_sum -= prof.min_level;
    sums.ascent_sum += prof.max_level;
    ++sums.descent_histogram[static_cast<std::size_t>(-prof.min_level)];
    for (const auto& [level, count] : prof.level_steps) {
      sums.level_moment += static_cast<std::int64_t>(level) * count;
      sums.level_pairs += static_cast<std::int64_t>(count) * (count - 1) / 2;
    }
    for (const auto& [level, count] : prof.down_steps) {
      sums.down_moment += static_cast<std::int64_t>(level) * count;
      const std::int64_t uses = 2 * static_cast<std::int64_t>(count);
      sums.down_pairs += uses * (uses - 1) / 2;
    }
  }
  return sums;
}

// ---------------------------------------------------------------------------
// Quadrature layer.  All integrands are assembled from f(t)^m, G = g^2, and
// the derivatives of the squared profiles F2' = 2 f f', G' = 2 g g'.  The
// squares stay smooth even when f or g has a sqrt-type endpoint slope (the
// Laguerre and Hermite specializations), so the finite-difference fallback is
// taken on F2 and G rather than on f and g themselves, and quadrature nodes
// never touch the endpoints.
// ---------------------------------------------------------------------------

double int_pow(double base, int exponent) {
  if (exponent < 0) throw std::logic_error("paths: negative profile exponent");
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

class ProfileEvaluator {
 public:
  explicit ProfileEvaluator(const GeneralModelSpec& spec) : spec_(spec) {
    f0_ = spec.f(0.0);
    f1_ = spec.f(1.0);
    g0_ = spec.g(0.0);
    g1_ = spec.g(1.0);
  }

  double f0() const { return f0_; }
  double f1() const { return f1_; }
  double g0() const { return g0_; }
  double g1() const { return g1_; }

  // integral of f^a G^r over [0, 1]
  double plain(int a, int r) const {
    return integrate([&](double t) { return int_pow(spec_.f(t), a) * g_sq_pow(t, r); },
                     0.0, 1.0);
  }

  // integral of f^{a-1} g^{2r} f' = (1/2) F2^{(a-2)/2} G^r F2'; requires even
  // a >= 2, which holds whenever the weight multiplying it is nonzero.
  double f_slope(int a, int r) const {
    if (a < 2 || a % 2 != 0)
      throw std::logic_error("paths: f'-integral requested with odd f power");
    return 0.5 * integrate(
                     [&](double t) {
                       const double f = spec_.f(t);
                       return int_pow(f * f, (a - 2) / 2) * g_sq_pow(t, r) * d_f_sq(t);
                     },
                     0.0, 1.0);
  }

  // integral of f^a g^{2r-1} g' = (1/2) f^a G^{r-1} G'; requires r >= 1.
  double g_slope(int a, int r) const {
    if (r < 1) throw std::logic_error("paths: g'-integral requested with r = 0");
    return 0.5 * integrate(
                     [&](double t) {
                       return int_pow(spec_.f(t), a) * g_sq_pow(t, r - 1) * d_g_sq(t);
                     },
                     0.0, 1.0);
  }

 private:
  double g_sq_pow(double t, int r) const {
    const double g = spec_.g(t);
    return int_pow(g * g, r);
  }

  double d_f_sq(double t) const {
    if (spec_.f_prime) return 2.0 * spec_.f(t) * spec_.f_prime(t);
    return derivative_of_square(spec_.f, t);
  }

  double d_g_sq(double t) const {
    if (spec_.g_prime) return 2.0 * spec_.g(t) * spec_.g_prime(t);
    return derivative_of_square(spec_.g, t);
  }

  // Fourth-order finite difference of h(t)^2 with step eps^(1/5), one-sided
  // near the ends of [0, 1] so h is never evaluated outside its domain.
  static double derivative_of_square(const std::function<double(double)>& h, double t) {
    static const double step = std::pow(std::numeric_limits<double>::epsilon(), 0.2);
    auto sq = [&](double u) {
      const double v = h(u);
      return v * v;
    };
    if (t >= 2.0 * step && t <= 1.0 - 2.0 * step) {
      return (sq(t - 2.0 * step) - 8.0 * sq(t - step) + 8.0 * sq(t + step) -
              sq(t + 2.0 * step)) /
             (12.0 * step);
    }
    const double s = t < 0.5 ? step : -step;  // forward near 0, backward near 1
    return (-25.0 * sq(t) + 48.0 * sq(t + s) - 36.0 * sq(t + 2.0 * s) +
            16.0 * sq(t + 3.0 * s) - 3.0 * sq(t + 4.0 * s)) /
           (12.0 * s);
  }

  const GeneralModelSpec& spec_;
  double f0_, f1_, g0_, g1_;
};

int deviation_order_limit(bool alternating) {
  return alternating ? kMaxAlternatingOrder : kMaxPlainOrder;
}

}  // namespace

std::vector<LatticePath> enumerate_paths(int k, int r, bool alternating) {
  check_family_args(k, r, alternating);
  const int length = alternating ? 2 * k : k;
  std::vector<LatticePath> out;
  LatticePath partial;
  partial.alternating = alternating;
  partial.steps.reserve(static_cast<std::size_t>(length));
  enumerate_into(length, r, r, alternating, partial, out);
  return out;
}

PathProfile profile(const LatticePath& path) {
  PathProfile prof;
  int level = 0;
  for (Step s : path.steps) {
    switch (s) {
      case Step::up:
        ++level;
        break;
      case Step::level:
        ++prof.level_steps[level];
        break;
      case Step::down:
        ++prof.down_steps[level];  // b_j counts the step j -> j-1 at j
        --level;
        break;
    }
    prof.min_level = std::min(prof.min_level, level);
    prof.max_level = std::max(prof.max_level, level);
  }
  return prof;
}

std::int64_t descent_class_count(int k, int r, int i, bool alternating) {
  const ClassSums& sums = class_sums(k, r, alternating);
  if (i < 0 || static_cast<std::size_t>(i) >= sums.descent_histogram.size()) return 0;
  return sums.descent_histogram[static_cast<std::size_t>(i)];
}

const ClassSums& class_sums(int k, int r, bool alternating) {
  check_family_args(k, r, alternating);
  const ClassKey key{k, r, alternating};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ClassSums sums = compute_class_sums(k, r, alternating);
  std::unique_lock lock(cache_mutex);
  return cache.try_emplace(key, std::move(sums)).first->second;
}

double general_moment(int k, const GeneralModelSpec& spec) {
  spec.validate();
  if (k < 1) throw std::domain_error("general_moment: order must be >= 1");
  const ProfileEvaluator eval(spec);
  double total = 0.0;
  if (spec.kind == GeneralKind::tridiagonal) {
    for (int r = 0; 2 * r <= k; ++r)
      total += trinomial(k, r).to_double() * eval.plain(k - 2 * r, r);
  } else {
    for (int r = 0; r <= k; ++r) {
      const double c = binomial(k, r).to_double();
      total += c * c * eval.plain(2 * (k - r), r);
    }
  }
  if (!std::isfinite(total))
    throw std::domain_error("general_moment: non-finite integrand");
  return total;
}

double general_deviation(int i, const GeneralModelSpec& spec) {
  spec.validate();
  if (i < 1) throw std::domain_error("general_deviation: order must be >= 1");
  const bool alternating = spec.kind == GeneralKind::bidiagonal;
  if (i > deviation_order_limit(alternating))
    throw std::length_error("general_deviation: order " + std::to_string(i) +
                            " exceeds the enumeration limit");
  const ProfileEvaluator eval(spec);
  const int r_max = alternating ? i : i / 2;

  double total = 0.0;
  for (int r = 0; r <= r_max; ++r) {
    const ClassSums& sums = class_sums(i, r, alternating);
    const int a = alternating ? 2 * (i - r) : i - 2 * r;
    const double half_count = 0.5 * static_cast<double>(sums.count);

    // Edge exclusions: paths dipping below the first row are lost at the
    // f(1) end of the profile, paths climbing past the last row at f(0); the
    // half-count terms are the Riemann-sum endpoint corrections.
    total += int_pow(eval.f1(), a) * int_pow(eval.g1(), 2 * r) *
             (half_count - static_cast<double>(sums.descent_sum));
    total += int_pow(eval.f0(), a) * int_pow(eval.g0(), 2 * r) *
             (-half_count - static_cast<double>(sums.ascent_sum));

    // Profile-slope terms from recentering f((i-j)/n), g((i-j)/n) at i/n.
    // level_moment vanishes identically for the plain family, which is also
    // what keeps the f power below even whenever the term survives.
    if (sums.level_moment != 0)
      total -= static_cast<double>(sums.level_moment) * eval.f_slope(a, r);
    if (sums.down_moment != 0)
      total -= 2.0 * static_cast<double>(sums.down_moment) * eval.g_slope(a, r);

    // Noise terms: one matrix entry hit twice by the same variable.  The
    // weights vanish whenever the reduced exponent would be negative.
    if (spec.sigma2 != 0.0 && sums.level_pairs != 0)
      total += spec.sigma2 * static_cast<double>(sums.level_pairs) * eval.plain(a - 2, r);
    if (spec.eta2 != 0.0 && sums.down_pairs != 0)
      total += spec.eta2 * static_cast<double>(sums.down_pairs) * eval.plain(a, r - 1);
  }
  if (!std::isfinite(total))
    throw std::domain_error("general_deviation: non-finite integrand");
  return total;
}

double general_covariance(int i, int j, const GeneralModelSpec& spec) {
  spec.validate();
  if (i < 1 || j < 1) throw std::domain_error("general_covariance: orders must be >= 1");
  const ProfileEvaluator eval(spec);
  double sigma_part = 0.0;
  double eta_part = 0.0;
  if (spec.kind == GeneralKind::tridiagonal) {
    // sigma^2: one diagonal f-entry differentiated out of each trace; the
    // ranges keep the remaining exponent i+j-2r-2s-2 nonnegative.
    for (int r = 0; i - 2 * r - 1 >= 0; ++r)
      for (int s = 0; j - 2 * s - 1 >= 0; ++s) {
        const double coef = static_cast<double>((i - 2 * r) * (j - 2 * s)) *
                            trinomial(i, r).to_double() * trinomial(j, s).to_double();
        sigma_part += coef * eval.plain(i + j - 2 * r - 2 * s - 2, r + s);
      }
    // eta^2: one off-diagonal g-entry from each trace, so the g power drops
    // by two and the f power stays at i-2r + j-2s.
    for (int r = 1; 2 * r <= i; ++r)
      for (int s = 1; 2 * s <= j; ++s) {
        const double coef = 4.0 * static_cast<double>(r) * static_cast<double>(s) *
                            trinomial(i, r).to_double() * trinomial(j, s).to_double();
        eta_part += coef * eval.plain(i + j - 2 * r - 2 * s, r + s - 1);
      }
  } else {
    // Bidiagonal Gram model, indexed by down-step counts r, s.
    for (int r = 0; r <= i - 1; ++r)
      for (int s = 0; s <= j - 1; ++s) {
        const double bi = binomial(i, r).to_double();
        const double bj = binomial(j, s).to_double();
        const double coef =
            4.0 * static_cast<double>((i - r) * (j - s)) * bi * bi * bj * bj;
        sigma_part += coef * eval.plain(2 * (i + j - r - s - 1), r + s);
      }
    for (int r = 1; r <= i; ++r)
      for (int s = 1; s <= j; ++s) {
        const double bi = binomial(i, r).to_double();
        const double bj = binomial(j, s).to_double();
        const double coef = 4.0 * static_cast<double>(r) * static_cast<double>(s) * bi *
                            bi * bj * bj;
        eta_part += coef * eval.plain(2 * (i + j - r - s), r + s - 1);
      }
  }
  const double total = spec.sigma2 * sigma_part + spec.eta2 * eta_part;
  if (!std::isfinite(total))
    throw std::domain_error("general_covariance: non-finite integrand");
  return total;
}

}  // namespace spectral::paths
