#include "bj/dimension_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bj/error.hpp"
#include "bj/random.hpp"

namespace bj {

namespace {

// Real coordinates of an element of M_n(K), entry by entry.
KMatrix from_coordinates(const SimpleAlgebra& a, const std::vector<double>& x) {
  const std::size_t d = static_cast<std::size_t>(real_dim(a.division_algebra));
  KMatrix m(a);
  for (std::size_t e = 0; e < m.entries().size(); ++e) {
    const double* c = &x[e * d];
    KScalar s(c[0]);
    if (d >= 2) s.x = c[1];
    if (d == 4) {
      s.y = c[2];
      s.z = c[3];
    }
    m(e / m.n(), e % m.n()) = s;
  }
  return m;
}

struct Objective {
  const SimpleAlgebra& a;
  const std::vector<PreparedElement>& omega;
  int evaluations = 0;

  // Sum of squared defects; scale invariant in x.
  double operator()(const std::vector<double>& x) {
    ++evaluations;
    const KMatrix b = from_coordinates(a, x);
    if (b.is_zero()) return static_cast<double>(omega.size());
    double s = 0.0;
    for (const auto& p : omega) {
      const double d = orthogonality_defect(p, b);
      s += d * d;
    }
    return s;
  }

  double worst(const std::vector<double>& x) const {
    const KMatrix b = from_coordinates(a, x);
    double w = 0.0;
    for (const auto& p : omega) w = std::max(w, orthogonality_defect(p, b));
    return w;
  }
};

void normalize(std::vector<double>& x) {
  const double r = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  for (auto& v : x) v /= r;
}

// Hooke-Jeeves pattern search from x; returns the final point (unit norm).
std::vector<double> pattern_search(Objective& f, std::vector<double> x, int budget, double target) {
  const std::size_t m = x.size();
  double fx = f(x);
  double step = 0.25;
  while (step > 1e-10 && f.evaluations < budget && fx > target) {
    // Exploratory moves along coordinates.
    std::vector<double> y = x;
    double fy = fx;
    for (std::size_t i = 0; i < m; ++i) {
      for (double sgn : {1.0, -1.0}) {
        y[i] += sgn * step;
        const double v = f(y);
        if (v < fy) {
          fy = v;
          break;
        }
        y[i] -= sgn * step;
      }
    }
    if (fy < fx) {
      // Pattern move: keep going in the improving direction while it pays.
      for (;;) {
        std::vector<double> z(m);
        for (std::size_t i = 0; i < m; ++i) z[i] = 2.0 * y[i] - x[i];
        x = y;
        fx = fy;
        const double fz = f(z);
        if (fz >= fy || f.evaluations >= budget) break;
        y = z;
        fy = fz;
      }
      normalize(x);
      fx = f(x);
    } else {
      step *= 0.5;
    }
  }
  normalize(x);
  return x;
}

// Quasi-Newton descent with central-difference gradients. The objective is a ratio of quadratics
// near a generic point, where coordinate search alone creeps along narrow valleys.
std::vector<double> quasi_newton(Objective& f, std::vector<double> x, int budget, double target) {
  const std::size_t m = x.size();
  auto gradient = [&](const std::vector<double>& p) {
    std::vector<double> g(m);
    std::vector<double> q = p;
    for (std::size_t i = 0; i < m; ++i) {
      const double h = 1e-7;
      q[i] = p[i] + h;
      const double up = f(q);
      q[i] = p[i] - h;
      const double down = f(q);
      q[i] = p[i];
      g[i] = (up - down) / (2.0 * h);
    }
    return g;
  };
  std::vector<double> hinv(m * m, 0.0);
  auto reset = [&] {
    std::fill(hinv.begin(), hinv.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) hinv[i * m + i] = 1.0;
  };
  reset();
  double fx = f(x);
  std::vector<double> g = gradient(x);
  while (f.evaluations < budget && fx > target) {
    std::vector<double> d(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) d[i] -= hinv[i * m + j] * g[j];
    double slope = std::inner_product(d.begin(), d.end(), g.begin(), 0.0);
    if (slope >= 0.0) {
      reset();
      d = g;
      for (auto& v : d) v = -v;
      slope = -std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
    }
    if (slope == 0.0) break;
    // Backtracking line search with the Armijo condition.
    double t = 1.0;
    std::vector<double> xn(m);
    double fn = fx;
    bool moved = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (std::size_t i = 0; i < m; ++i) xn[i] = x[i] + t * d[i];
      fn = f(xn);
      if (fn <= fx + 1e-4 * t * slope) {
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
    const std::vector<double> gn = gradient(xn);
    std::vector<double> s(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = gn[i] - g[i];
    }
    const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
    if (sy > 1e-16) {
      std::vector<double> hy(m, 0.0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) hy[i] += hinv[i * m + j] * y[j];
      const double yhy = std::inner_product(y.begin(), y.end(), hy.begin(), 0.0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          hinv[i * m + j] += (sy + yhy) * s[i] * s[j] / (sy * sy) - (hy[i] * s[j] + s[i] * hy[j]) / sy;
    }
    x = xn;
    fx = fn;
    g = gn;
  }
  normalize(x);
  return x;
}

}  // namespace

std::optional<KMatrix> find_common_member(const SimpleAlgebra& a, const std::vector<PreparedElement>& omega,
                                          std::uint64_t seed, const CommonMemberSearch& opts) {
  Rng rng(seed);
  const std::size_t m = static_cast<std::size_t>(a.n * a.n * real_dim(a.division_algebra));
  std::normal_distribution<double> gauss;
  Objective f{a, omega};
  const double target = opts.accept * opts.accept * 1e-2;
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> x(m);
    for (auto& v : x) v = gauss(rng);
    normalize(x);
    const int budget = f.evaluations + opts.max_evaluations / opts.restarts;
    x = quasi_newton(f, std::move(x), budget, target);
    if (f.worst(x) > opts.accept) x = pattern_search(f, std::move(x), budget, target);
    if (f.worst(x) <= opts.accept) {
      KMatrix b = from_coordinates(a, x);
      return (1.0 / b.frobenius_norm()) * b;
    }
  }
  return std::nullopt;
}

DimensionSearchResult graph_dimension_search(const SimpleAlgebra& a, int pool, int trials, std::uint64_t seed) {
  if (pool < 1) throw Error(ErrorCode::InvalidArgument, "pool must be nonempty");
  Rng rng(derive_seed(seed, 0xd1));
  std::vector<KMatrix> elements;
  std::vector<PreparedElement> prepared;
  for (int i = 0; i < pool; ++i) {
    elements.push_back(random_matrix(a, rng));
    prepared.push_back(prepare(elements.back()));
  }

  DimensionSearchResult out;
  std::vector<PreparedElement> omega;
  std::vector<bool> used(elements.size());
  std::uint64_t stream = 1;
  std::optional<KMatrix> common = find_common_member(a, omega, derive_seed(seed, stream++));
  while (common) {
    // The next element must cut the current common member out of the intersection.
    std::size_t pick = elements.size();
    for (std::size_t i = 0; i < elements.size() && pick == elements.size(); ++i)
      if (!used[i] && orthogonality_defect(prepared[i], *common) > 1e-3) pick = i;
    if (pick == elements.size()) break;
    used[pick] = true;
    omega.push_back(prepared[pick]);
    out.omega.push_back(elements[pick]);
    common = find_common_member(a, omega, derive_seed(seed, stream++));
  }
  out.candidate_size = static_cast<int>(omega.size());
  // Pool exhausted with a common member still present: nothing is certified.
  if (common || omega.empty()) return out;

  const std::size_t smaller = omega.size() - 1;
  out.refutation_trials = trials;
  std::vector<std::size_t> idx(elements.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (int t = 0; t < trials; ++t) {
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<PreparedElement> subset;
    for (std::size_t i = 0; i < smaller; ++i) subset.push_back(prepared[idx[i]]);
    if (find_common_member(a, subset, derive_seed(seed, stream++))) ++out.refutations_found;
  }
  out.refuted_smaller = out.refutations_found == trials;
  return out;
}

}  // namespace bj
