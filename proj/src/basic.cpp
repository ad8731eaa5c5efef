#include "hgt/basic.hpp"

namespace hgt {

TwoConnection twist_connection(const CrossedModule& cm, const TwoConnection& a, const GroupElt& p,
                               const LieValuedForm& gam, const LieValuedForm& sig,
                               const LieValuedForm& Sig) {
  TwoConnection out;
  LieValuedForm adms = ad_g(cm, p, a.omega - sig);
  LieValuedForm adth = ad_g(cm, p, a.theta);
  out.omega = adms;
  out.Omega = act_e(cm, p, a.Omega - Sig) - mudot2(cm, adms, gam);
  out.theta = adth;
  out.Theta = act_e(cm, p, a.Theta) - mudot2(cm, adth, gam);
  return out;
}

OneGauge twist_gauge(const CrossedModule& cm, const OneGauge& psi, const GroupElt& p,
                     const LieValuedForm& gam, const LieValuedForm& sig, const LieValuedForm& Sig) {
  OneGauge out;
  out.g = p * psi.g * p.inverse();
  out.J = act_e(cm, p, psi.J) + gam - act_e(cm, out.g, gam);
  LieValuedForm hshift = psi.h - sig + ad_g(cm, psi.g, sig);
  out.h = ad_g(cm, p, hshift);
  out.K = act_e(cm, p,
                psi.K - Sig + act_e(cm, psi.g, Sig) - mudot2(cm, ad_g(cm, psi.g, sig), psi.J) -
                    mudot2(cm, hshift, act_e(cm, p.inverse(), gam)));
  return out;
}

BasicTwoGauge twist_two_gauge(const CrossedModule& cm, const GroupElt& E, const LieValuedForm& C,
                              const GroupElt& p, const LieValuedForm& gam) {
  BasicTwoGauge out;
  out.E_b = mu_group(cm, p, E);
  out.C_b = act_e(cm, p, C) + gam - ad_e(cm, out.E_b, gam);
  return out;
}

TwoConnection basicify_connection(const FieldStore& store, const TwoConnection& a,
                                  const AdaptedCoordinates& co) {
  return twist_connection(store.cm(), a, store.group(co.gamma).elt, co.Gamma, co.sigma, co.Sigma);
}

OneGauge basicify_gauge(const FieldStore& store, const OneGauge& psi, const AdaptedCoordinates& co) {
  return twist_gauge(store.cm(), psi, store.group(co.gamma).elt, co.Gamma, co.sigma, co.Sigma);
}

BasicTwoGauge basicify_two_gauge(const FieldStore& store, const TwoGauge& eps,
                                 const AdaptedCoordinates& co) {
  return twist_two_gauge(store.cm(), eps.E, eps.C, store.group(co.gamma).elt, co.Gamma);
}

MatchingData matching_data(const FieldStore& store, const AdaptedCoordinates& primed,
                           const AdaptedCoordinates& co) {
  const CrossedModule& cm = store.cm();
  const GroupElt& gp = store.group(primed.gamma).elt;
  const GroupElt& g = store.group(co.gamma).elt;
  MatchingData m;
  m.f_b = gp * g.inverse();
  m.F_b = primed.Gamma - act_e(cm, m.f_b, co.Gamma);
  m.s_b = ad_g(cm, g, primed.sigma - co.sigma);
  m.S_b = act_e(cm, g, primed.Sigma - co.Sigma) - mudot2(cm, m.s_b, co.Gamma);
  return m;
}

namespace {
using Bodies = std::vector<std::map<SymId, Rational>>;
}

std::vector<Check> basic_connection_checks(const FieldStore& store, const TwoConnection& b,
                                           const Bodies& bodies, const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  std::vector<Check> out;
  out.push_back({prefix + ".basic", "connection data are annihilated by all contractions and Lie derivatives",
                 [=, &store]() -> std::string {
                   for (const LieValuedForm* f : {&b.omega, &b.Omega, &b.theta, &b.Theta}) {
                     std::string w = check_basic(store, *f, bodies);
                     if (!w.empty()) return w;
                   }
                   return "";
                 }});
  out.push_back({prefix + ".d", "basic structure equations", [=, &store]() -> std::string {
                   std::string w = check_equal(
                       store, store.apply(ds.d(), b.omega),
                       bracket(cm, b.omega, b.omega) * Rational(-1, 2) + taudot(cm, b.Omega) + b.theta,
                       bodies);
                   if (w.empty())
                     w = check_equal(store, store.apply(ds.d(), b.Omega),
                                     -mudot2(cm, b.omega, b.Omega) + b.Theta, bodies);
                   if (w.empty())
                     w = check_equal(store, store.apply(ds.d(), b.theta),
                                     -bracket(cm, b.omega, b.theta) - taudot(cm, b.Theta), bodies);
                   if (w.empty())
                     w = check_equal(store, store.apply(ds.d(), b.Theta),
                                     -mudot2(cm, b.omega, b.Theta) + mudot2(cm, b.theta, b.Omega),
                                     bodies);
                   return w;
                 }});
  return out;
}

std::vector<Check> basic_gauge_checks(const FieldStore& store, const OneGauge& b, const Bodies& bodies,
                                      const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  std::vector<Check> out;
  out.push_back({prefix + ".basic", "gauge data are annihilated by all contractions and Lie derivatives",
                 [=, &store]() -> std::string {
                   std::string w = check_basic_group(store, b.g, bodies);
                   if (w.empty()) w = check_basic(store, b.J, bodies);
                   if (w.empty()) w = check_basic(store, b.h, bodies);
                   if (w.empty()) w = check_basic(store, b.K, bodies);
                   return w;
                 }});
  out.push_back({prefix + ".d", "basic differential relations", [=, &store]() -> std::string {
                   SMat mc = store.apply(ds.d(), b.g.m) * b.g.minv;
                   std::string w =
                       check_zero(store, mc - form_hat(cm, -b.h - taudot(cm, b.J)), bodies);
                   if (w.empty())
                     w = check_equal(store, store.apply(ds.d(), b.J),
                                     -b.K - bracket(cm, b.J, b.J) * Rational(1, 2) -
                                         mudot2(cm, b.h, b.J),
                                     bodies);
                   if (w.empty())
                     w = check_equal(store, store.apply(ds.d(), b.h),
                                     bracket(cm, b.h, b.h) * Rational(-1, 2) + taudot(cm, b.K),
                                     bodies);
                   if (w.empty())
                     w = check_equal(store, store.apply(ds.d(), b.K), -mudot2(cm, b.h, b.K), bodies);
                   return w;
                 }});
  return out;
}

std::vector<Check> basic_two_gauge_checks(const FieldStore& store, const BasicTwoGauge& b,
                                          const TwoConnection& basic_ref, const Bodies& bodies,
                                          const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  std::vector<Check> out;
  out.push_back({prefix + ".basic", "modification data are annihilated by all contractions and Lie derivatives",
                 [=, &store]() -> std::string {
                   std::string w = check_basic_group(store, b.E_b, bodies);
                   if (w.empty()) w = check_basic(store, b.C_b, bodies);
                   return w;
                 }});
  out.push_back({prefix + ".d", "basic differential relations of the modification data",
                 [=, &store]() -> std::string {
                   SMat mc = store.apply(ds.d(), b.E_b.m) * b.E_b.minv;
                   std::string w = check_zero(
                       store, mc - form_hat(cm, -b.C_b - coact(cm, basic_ref.omega, b.E_b)), bodies);
                   if (w.empty())
                     w = check_equal(store, store.apply(ds.d(), b.C_b),
                                     bracket(cm, b.C_b, b.C_b) * Rational(-1, 2) -
                                         mudot2(cm, basic_ref.omega, b.C_b) -
                                         coact(cm, basic_ref.theta, b.E_b) - basic_ref.Omega +
                                         ad_e(cm, b.E_b, basic_ref.Omega),
                                     bodies);
                   return w;
                 }});
  return out;
}

std::vector<Check> matching_recovery_checks(const FieldStore& store, const MatchingData& m,
                                            const Bodies& bodies, const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  std::vector<Check> out;
  out.push_back({prefix + ".basic", "matching data are annihilated by all contractions and Lie derivatives",
                 [=, &store]() -> std::string {
                   std::string w = check_basic_group(store, m.f_b, bodies);
                   if (w.empty()) w = check_basic(store, m.F_b, bodies);
                   if (w.empty()) w = check_basic(store, m.s_b, bodies);
                   if (w.empty()) w = check_basic(store, m.S_b, bodies);
                   return w;
                 }});
  out.push_back({prefix + ".shift", "shift components recovered from the transformation ones",
                 [=, &store]() -> std::string {
                   // s_b = f^{-1} d f + taudot(mudot(f^{-1}, F)), S_b = mudot(f^{-1}, dF + [F,F]/2)
                   SMat left = m.f_b.minv * store.apply(ds.d(), m.f_b.m);
                   LieValuedForm want =
                       m.s_b - taudot(cm, act_e(cm, m.f_b.inverse(), m.F_b));
                   std::string w = check_zero(store, left - form_hat(cm, want), bodies);
                   if (w.empty())
                     w = check_equal(store, m.S_b,
                                     act_e(cm, m.f_b.inverse(),
                                           store.apply(ds.d(), m.F_b) +
                                               bracket(cm, m.F_b, m.F_b) * Rational(1, 2)),
                                     bodies);
                   return w;
                 }});
  return out;
}

}  // namespace hgt
