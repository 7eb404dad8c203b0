#include "bj/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bj {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi, double width,
                                      const std::function<bool()>& stop) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarMinimum best;
  auto eval = [&](double x) {
    const double v = f(x);
    ++best.evaluations;
    if (best.evaluations == 1 || v < best.value) {
      best.value = v;
      best.x = x;
    }
    return v;
  };

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  while (hi - lo > width) {
    if (stop && stop()) break;
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = eval(d);
    }
  }
  eval(0.5 * (lo + hi));
  return best;
}

namespace {

constexpr double kRealWidth = 1e-9;
constexpr double kComplexStep = 1e-8;
constexpr int kMaxRounds = 500;
constexpr int kFanDirections = 8;
constexpr double kNestedWidth = 1e-7;

}  // namespace

FieldMinimum minimize_over_field(BaseField f, const std::function<double(std::complex<double>)>& objective,
                                 double radius, std::optional<double> stop_below) {
  FieldMinimum best;
  best.lambda = 0.0;
  best.value = objective(0.0);
  best.evaluations = 1;
  auto stop = [&] { return stop_below && best.value < *stop_below; };
  if (radius <= 0.0 || stop()) return best;

  // Line search through `origin` along `dir` over parameter range [-span, span].
  auto line = [&](std::complex<double> origin, std::complex<double> dir, double span) {
    auto g = [&](double t) {
      const std::complex<double> lam = origin + t * dir;
      const double v = objective(lam);
      if (v < best.value) {
        best.value = v;
        best.lambda = lam;
      }
      return v;
    };
    const ScalarMinimum m = golden_section_minimize(g, -span, span, kRealWidth, stop);
    best.evaluations += m.evaluations;
    return origin + m.x * dir;
  };

  if (f == BaseField::R) {
    line(0.0, 1.0, radius);
    return best;
  }

  std::complex<double> lam = 0.0;
  for (int round = 0; round < kMaxRounds && !stop(); ++round) {
    const std::complex<double> start = lam;
    lam = line({-0.0, lam.imag()}, 1.0, radius);
    lam = line({lam.real(), 0.0}, {0.0, 1.0}, radius);
    lam = best.lambda;
    if (std::abs(lam - start) < kComplexStep) break;
  }

  for (int pass = 0; pass < kMaxRounds && !stop(); ++pass) {
    const double before = best.value;
    for (int m = 0; m < kFanDirections && !stop(); ++m) {
      const double angle = std::numbers::pi * m / kFanDirections;
      line(best.lambda, std::polar(1.0, angle), radius);
    }
    if (before - best.value <= 1e-14 * std::max(1.0, before)) break;
  }
  if (stop()) return best;

  // The descent cone at a kink can be narrower than any fixed fan. Nested golden section cannot stall:
  // x -> min_y f(x + iy) is convex whenever f is jointly convex.
  auto inner = [&](double x) {
    auto g = [&](double y) {
      const double v = objective({x, y});
      if (v < best.value) {
        best.value = v;
        best.lambda = {x, y};
      }
      return v;
    };
    const ScalarMinimum m = golden_section_minimize(g, -radius, radius, kNestedWidth, stop);
    best.evaluations += m.evaluations;
    return m.value;
  };
  golden_section_minimize(inner, -radius, radius, kNestedWidth, stop);
  return best;
}

}  // namespace bj
