#include "hde/quadrature.hpp"

#include <cmath>

#include "hde/errors.hpp"

namespace hde {

namespace {

struct Panel {
  double a, b, fa, fm, fb, s;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, const Panel& p, double tol,
               int depth) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double sl = simpson(p.a, m, p.fa, flm, p.fm);
  const double sr = simpson(m, p.b, p.fm, frm, p.fb);
  const double err = (sl + sr - p.s) / 15.0;
  if (std::fabs(err) <= tol) {
    return sl + sr + err;
  }
  if (depth <= 0) {
    throw NumericError("adaptive_simpson: depth cap hit before tolerance");
  }
  return recurse(f, {p.a, m, p.fa, flm, p.fm, sl}, 0.5 * tol, depth - 1) +
         recurse(f, {m, p.b, p.fm, frm, p.fb, sr}, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (!(a < b)) return 0.0;
  if (!(abs_tol > 0.0)) throw NumericError("adaptive_simpson: tolerance must be > 0");

  // Fixed initial subdivision so a peak narrower than the panel spacing
  // cannot slip between the three Simpson probes of a single huge panel.
  constexpr int kInitialPanels = 16;
  const double w = (b - a) / kInitialPanels;
  double total = 0.0;
  for (int k = 0; k < kInitialPanels; ++k) {
    const double pa = a + k * w;
    const double pb = (k + 1 == kInitialPanels) ? b : a + (k + 1) * w;
    const double fa = f(pa);
    const double fb = f(pb);
    const double fm = f(0.5 * (pa + pb));
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) {
      throw NumericError("adaptive_simpson: non-finite integrand");
    }
    total += recurse(f, {pa, pb, fa, fm, fb, simpson(pa, pb, fa, fm, fb)},
                     abs_tol / kInitialPanels, max_depth);
  }
  return total;
}

}  // namespace hde
