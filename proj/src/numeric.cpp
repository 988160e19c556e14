#include "civspec/numeric.hpp"

#include <algorithm>
#include <limits>

#include "civspec/error.hpp"

namespace civspec::numeric {

RootResult bisect(const std::function<double(double)>& f, double lo, double hi,
                  double ftol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if ((flo > 0.0) == (fhi > 0.0)) {
    fail(ErrorCode::Domain, "bisect: root not bracketed");
  }
  const bool increasing = flo < 0.0;
  int it = 0;
  double best_x = std::abs(flo) < std::abs(fhi) ? lo : hi;
  double best_f = std::min(std::abs(flo), std::abs(fhi));
  for (; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (std::abs(fm) < best_f) {
      best_f = std::abs(fm);
      best_x = mid;
    }
    if (fm == 0.0 || best_f <= ftol) break;
    if ((fm < 0.0) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {best_x, best_f, it, true};
}

RootResult safeguarded_newton(const std::function<double(double)>& f,
                              const std::function<double(double)>& df,
                              double x0, double lo, double hi, double ftol,
                              int max_iter) {
  double flo = f(lo);
  const double fhi = f(hi);
  if ((flo > 0.0) == (fhi > 0.0) && flo != 0.0 && fhi != 0.0) {
    fail(ErrorCode::Domain, "safeguarded_newton: root not bracketed");
  }
  const bool increasing = flo < 0.0;
  double x = std::clamp(x0, lo, hi);
  for (int it = 0; it < max_iter; ++it) {
    const double fx = f(x);
    if (std::abs(fx) <= ftol) return {x, std::abs(fx), it, true};
    if ((fx < 0.0) == increasing) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = df(x);
    double next = (d != 0.0 && std::isfinite(d)) ? x - fx / d : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, std::abs(x))) {
      const double fn = f(next);
      return {next, std::abs(fn), it + 1, std::abs(fn) <= ftol};
    }
    x = next;
  }
  return {x, std::abs(f(x)), max_iter, false};
}

MaxResult golden_section_max(const std::function<double(double)>& f, double lo,
                             double hi, double xtol, int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  for (; it < max_iter && (b - a) > xtol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = fc >= fd ? c : d;
  return {x, std::max(fc, fd), it};
}

double derivative_in_domain(const std::function<double(double)>& f, double x,
                            double step, double lo, double hi) {
  if (x - step >= lo && x + step <= hi) return central_difference(f, x, step);
  if (x + 2.0 * step <= hi) return one_sided_difference(f, x, step);
  return one_sided_difference(f, x, -step);
}

}  // namespace civspec::numeric
