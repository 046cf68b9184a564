#pragma once

#include <span>

namespace spectral {

/// Kahan compensated accumulator.
struct KahanAccumulator {
  double sum = 0.0;
  double c = 0.0;

  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

inline double kahan_sum(std::span<const double> xs) {
  KahanAccumulator acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace spectral
