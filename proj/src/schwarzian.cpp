#include "ahs/schwarzian.hpp"

namespace ahs {

namespace {

// G(w, z) = f'(z)/(f(w) - f(z)) from a jet of f at z; f(w) comes from
// polynomial evaluation of the truncation, so |w - z| must sit well inside
// the jet's reliable radius.
Cplx g_of(const JetC& fz, Cplx w) {
  const Cplx z = *fz.base();
  const Cplx fw = jet_polyval(fz, w - z);
  const Cplx den = fw - fz.value();
  if (std::abs(den) <= kSingularFloorRel * std::max(std::abs(fw), 1.0))
    throw critical_point_error("f(w) - f(z) vanishes in Riccati check");
  return fz[1] / den;
}

}  // namespace

CheckReport riccati_check(const std::function<JetC(Cplx, int)>& f_jet,
                          Cplx z0, Cplx w, double h, int jet_order) {
  if (!(h > 1e-9 && h < 1e-2))
    throw math_error("Riccati difference step outside supported range");
  if (jet_order < 2) throw order_error("Riccati check needs jet order >= 2");
  const JetC at = f_jet(z0, jet_order);
  const JetC lo = f_jet(z0 - Cplx(h, 0.0), jet_order);
  const JetC hi = f_jet(z0 + Cplx(h, 0.0), jet_order);
  const Cplx g0 = g_of(at, w);
  const Cplx dg = (g_of(hi, w) - g_of(lo, w)) / Cplx(2.0 * h, 0.0);
  const Cplx pre = domain_traits<Cplx>::from_int(2) * at[2] / at[1];
  const Cplx rhs = g0 * g0 + pre * g0;
  CheckReport rep;
  detail::absorb_diff(rep, dg, rhs);
  return rep;
}

}  // namespace ahs
