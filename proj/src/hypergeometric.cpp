#include "ballft/hypergeometric.hpp"

#include <string>
#include <vector>

namespace ballft {

namespace {

bool is_integer_at_most(Complex p, int bound) {
  return p.imag() == 0.0 && p.real() == std::floor(p.real()) && p.real() <= bound;
}

void validate(const HypergeometricSpec& spec) {
  if (spec.termination_order < 0) {
    throw ParameterError("pfq_terminating: negative termination order");
  }
  const Complex target(-static_cast<double>(spec.termination_order), 0.0);
  bool terminates = false;
  for (const Complex& a : spec.numerator_params) terminates = terminates || a == target;
  if (!terminates) {
    throw ParameterError("pfq_terminating: no numerator parameter equals -" +
                         std::to_string(spec.termination_order));
  }
  for (const Complex& b : spec.denominator_params) {
    if (is_integer_at_most(b, 0) && b.real() > -spec.termination_order) {
      throw DenominatorPoleError("pfq_terminating: denominator parameter " +
                                 std::to_string(b.real()) + " vanishes inside the sum");
    }
  }
}

using ComplexExt = std::complex<long double>;

// Runs the engine in extended precision; cancellation in the alternating sums
// then costs digits below double resolution.
SeriesSum<Complex> extended_sum(std::span<const Complex> num, std::span<const Complex> den,
                                Complex z, int last_index) {
  std::vector<ComplexExt> num_ext(num.begin(), num.end());
  std::vector<ComplexExt> den_ext(den.begin(), den.end());
  const auto ext = detail::terminating_sum<ComplexExt>(num_ext, den_ext, ComplexExt(z), last_index);
  SeriesSum<Complex> out;
  out.value = Complex(static_cast<double>(ext.value.real()), static_cast<double>(ext.value.imag()));
  out.peak = ext.peak;
  return out;
}

}  // namespace

SeriesSum<Complex> pfq_terminating_detailed(const HypergeometricSpec& spec) {
  validate(spec);
  return extended_sum(spec.numerator_params, spec.denominator_params, spec.argument,
                      spec.termination_order);
}

Complex pfq_terminating(const HypergeometricSpec& spec) {
  return pfq_terminating_detailed(spec).value;
}

SeriesSum<Complex> hyp3f2_unit_detailed(int n, Complex upper2, Complex upper3, Complex lower1,
                                        Complex lower2) {
  if (n < 0) throw ParameterError("hyp3f2_unit: negative degree");
  const Complex num[3] = {Complex(-n, 0.0), upper2, upper3};
  const Complex den[2] = {lower1, lower2};
  for (const Complex& b : den) {
    if (is_integer_at_most(b, 0) && b.real() > -n) {
      throw DenominatorPoleError("hyp3f2_unit: lower parameter vanishes inside the sum");
    }
  }
  return extended_sum(num, den, Complex(1.0, 0.0), n);
}

Complex hyp3f2_unit(int n, Complex upper2, Complex upper3, Complex lower1, Complex lower2) {
  return hyp3f2_unit_detailed(n, upper2, upper3, lower1, lower2).value;
}

}  // namespace ballft
