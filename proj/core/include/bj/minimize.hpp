#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "bj/scalar.hpp"

namespace bj {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi],
/// stopping once the bracket is narrower than `width` or `stop()` returns true.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi, double width,
                                      const std::function<bool()>& stop = {});

struct FieldMinimum {
  std::complex<double> lambda;
  double value = 0.0;
  int evaluations = 0;
};

/// Minimizes a convex function of one F-scalar over |lambda| <= radius.
///
/// F = R: golden-section to width 1e-9. F = C: golden-section alternation over
/// Re and Im until a round moves lambda by less than 1e-8, followed by line
/// searches along a fan of eight directions and a nested golden-section pass
/// (coordinate alternation alone can stall at a kink of a nonsmooth
/// objective). If `stop_below` is set, the
/// search returns as soon as a value below it has been seen.
FieldMinimum minimize_over_field(BaseField f, const std::function<double(std::complex<double>)>& objective,
                                 double radius, std::optional<double> stop_below = std::nullopt);

}  // namespace bj
