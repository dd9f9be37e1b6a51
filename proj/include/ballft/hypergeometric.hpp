#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "ballft/errors.hpp"
#include "ballft/special.hpp"

namespace ballft {

/// A terminating generalized hypergeometric series pFq(num; den; z).
/// One numerator parameter must equal -termination_order.
struct HypergeometricSpec {
  std::vector<Complex> numerator_params;
  std::vector<Complex> denominator_params;
  Complex argument{1.0, 0.0};
  int termination_order = 0;
};

/// Value of a terminating sum together with the largest partial-sum magnitude
/// seen while accumulating it.
template <class T>
struct SeriesSum {
  T value{};
  double peak = 0.0;

  /// Cancellation guard: the result is small compared with the partial sums,
  /// so its relative accuracy is degraded.
  bool low_confidence() const { return std::abs(value) < 1e-10 * peak; }
};

/// Sum of the series up to and including index `termination_order`, with the
/// term-ratio recurrence and compensated accumulation. Validates the spec and
/// throws ParameterError / DenominatorPoleError.
SeriesSum<Complex> pfq_terminating_detailed(const HypergeometricSpec& spec);
Complex pfq_terminating(const HypergeometricSpec& spec);

/// 3F2(-n, upper2, upper3; lower1, lower2; 1).
Complex hyp3f2_unit(int n, Complex upper2, Complex upper3, Complex lower1, Complex lower2);
SeriesSum<Complex> hyp3f2_unit_detailed(int n, Complex upper2, Complex upper3, Complex lower1,
                                        Complex lower2);

namespace detail {

/// Raw summation engine shared by every series in the library. Sums indices
/// 0..last_index; stops early once a term is exactly zero. No validation beyond
/// the denominator check.
template <class T>
SeriesSum<T> terminating_sum(std::span<const T> num, std::span<const T> den, T z, int last_index) {
  SeriesSum<T> out;
  T sum = T(1);
  T comp = T(0);
  T term = T(1);
  out.peak = 1.0;
  for (int k = 0; k < last_index; ++k) {
    const T kd = T(k);
    T numer = z;
    for (const T& a : num) numer *= (a + kd);
    T denom = kd + T(1);
    for (const T& b : den) {
      const T f = b + kd;
      if (f == T(0)) {
        if (term * numer == T(0)) {
          out.value = sum;
          return out;
        }
        throw DenominatorPoleError("hypergeometric series: denominator parameter hits zero");
      }
      denom *= f;
    }
    const T ratio = numer / denom;
    term *= ratio;
    if (term == T(0)) break;
    {
      // Kahan-compensated accumulation
      const T y = term - comp;
      const T t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    out.peak = std::max(out.peak, static_cast<double>(std::abs(sum)));
  }
  out.value = sum;
  return out;
}

}  // namespace detail

}  // namespace ballft
