#include "swmhd/positivity.hpp"

#include <algorithm>
#include <sstream>

#include "swmhd/errors.hpp"

namespace swmhd {

SplitHeights split_heights(double h_i, double flux_h_left, double flux_h_right, double lam) {
  return {h_i + 2.0 * lam * flux_h_left, h_i - 2.0 * lam * flux_h_right};
}

namespace {

double one_sided_theta(double h_lf, double h_kth, double eps) {
  if (!(h_lf > eps)) {
    std::ostringstream msg;
    msg << "Lax-Friedrichs half height " << h_lf << " is not above eps = " << eps;
    throw InvalidLF(msg.str());
  }
  if (h_kth >= eps) return 1.0;
  return std::clamp((h_lf - eps) / (h_lf - h_kth), 0.0, 1.0);
}

}  // namespace

double pp_theta(const InterfaceHeights& lf, const InterfaceHeights& kth, double eps) {
  return std::min(one_sided_theta(lf.left_plus, kth.left_plus, eps),
                  one_sided_theta(lf.right_minus, kth.right_minus, eps));
}

Vec5 limit_flux(const Vec5& f_kth, const Vec5& f_lf, double theta) {
  if (theta == 1.0) return f_kth;
  return theta * f_kth + (1.0 - theta) * f_lf;
}

double limit_source_mean(double m_kth, double m_2pt, double theta) {
  if (theta == 1.0) return m_kth;
  return theta * m_kth + (1.0 - theta) * m_2pt;
}

}  // namespace swmhd
