#include "hde/optimize.hpp"

#include <cmath>
#include <string>

#include "hde/errors.hpp"

namespace hde {

namespace {

constexpr int kGridPoints = 65;

}  // namespace

MinimizeResult minimize_scalar(const std::function<double(double)>& f, double lo,
                               double hi, double tol) {
  if (!(lo < hi)) throw Error("minimize_scalar: need lo < hi");
  if (!(tol > 0.0)) throw Error("minimize_scalar: need tol > 0");

  int evals = 0;
  double best_x = lo;
  double best_f = 0.0;
  bool have_best = false;
  const auto probe = [&](double x) {
    const double v = f(x);
    ++evals;
    if (!std::isfinite(v)) {
      throw NumericError("minimize_scalar: non-finite objective at x = " +
                         std::to_string(x));
    }
    // Strict improvement, or an equal value further left, wins.
    if (!have_best || v < best_f || (v == best_f && x < best_x)) {
      have_best = true;
      best_f = v;
      best_x = x;
    }
    return v;
  };

  // Grid scan; the bracket is the pair of cells around the best grid point.
  const double step = (hi - lo) / (kGridPoints - 1);
  int best_k = 0;
  double best_grid = 0.0;
  for (int k = 0; k < kGridPoints; ++k) {
    const double x = (k + 1 == kGridPoints) ? hi : lo + k * step;
    const double v = probe(x);
    if (k == 0 || v < best_grid) {
      best_grid = v;
      best_k = k;
    }
  }
  double a = lo + std::max(best_k - 1, 0) * step;
  double b = (best_k + 1 >= kGridPoints - 1) ? hi : lo + (best_k + 1) * step;

  // Golden-section refinement; <= comparisons shrink toward the left end on
  // plateaus, matching the global tie-break.
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - (b - a) * kInvPhi;
  double d = a + (b - a) * kInvPhi;
  double fc = probe(c);
  double fd = probe(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = probe(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = probe(d);
    }
  }
  return MinimizeResult{best_x, evals};
}

}  // namespace hde
