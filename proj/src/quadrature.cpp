// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include <fmt/format.h>

#include "twrnoma/errors.hpp"

namespace twrnoma {

void QuadSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw ConfigError("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw ConfigError("quadrature needs at least one subdivision");
}

namespace {

struct Panel {
  double a, b;
  double fa, fq1, fm, fq3, fb;  // f at a, a+h/4, a+h/2, a+3h/4, b
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                 double fb) {
  const double h = b - a;
  const double fq1 = f(a + 0.25 * h);
  const double fq3 = f(a + 0.75 * h);
  if (!std::isfinite(fq1) || !std::isfinite(fq3)) {
    throw OracleError(fmt::format("integrand not finite on [{}, {}]", a, b));
  }
  const double coarse = h / 6.0 * (fa + 4.0 * fm + fb);
  const double fine = h / 12.0 * (fa + 4.0 * fq1 + 2.0 * fm + 4.0 * fq3 + fb);
  return {a, b, fa, fq1, fm, fq3, fb, fine + (fine - coarse) / 15.0, std::abs(fine - coarse) / 15.0};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadSpec& spec) {
  spec.validate();
  if (!(b > a)) return {0.0, 0.0, 0};

  constexpr int kInitialPanels = 32;
  std::priority_queue<Panel> heap;
  double total = 0.0, error = 0.0;

  const double width = (b - a) / kInitialPanels;
  double x0 = a, f0 = f(a);
  for (int i = 0; i < kInitialPanels; ++i) {
    const double x1 = i + 1 == kInitialPanels ? b : a + (i + 1) * width;
    const double fm = f(0.5 * (x0 + x1));
    const double f1 = f(x1);
    if (!std::isfinite(f0) || !std::isfinite(fm) || !std::isfinite(f1)) {
      throw OracleError(fmt::format("integrand not finite on [{}, {}]", x0, x1));
    }
    Panel p = make_panel(f, x0, x1, f0, fm, f1);
    total += p.value;
    error += p.error;
    heap.push(p);
    x0 = x1;
    f0 = f1;
  }

  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (heap.size() >= spec.max_subdivisions) {
      throw OracleError(fmt::format("quadrature did not converge: error {} after {} intervals", error,
                                    heap.size()));
    }
    const Panel p = heap.top();
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      throw OracleError("quadrature interval collapsed below machine resolution");
    }
    const Panel left = make_panel(f, p.a, mid, p.fa, p.fq1, p.fm);
    const Panel right = make_panel(f, mid, p.b, p.fm, p.fq3, p.fb);
    total += left.value + right.value - p.value;
    error += left.error + right.error - p.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  const std::size_t intervals = heap.size();
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {total, error, intervals};
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a, double scale,
                                 const QuadSpec& spec) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw OracleError("semi-infinite map needs a positive scale");
  auto mapped = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double x = a + scale * (1.0 - u) / u;
    return f(x) * scale / (u * u);
  };
  return integrate(mapped, 0.0, 1.0, spec);
}

}  // namespace twrnoma
