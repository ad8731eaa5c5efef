#pragma once

#include "hgt/gauge.hpp"

namespace hgt {

/// Matching data between two adapted coordinate families on an overlap.
struct MatchingData {
  GroupElt f_b;
  LieValuedForm F_b;  // e, degree 1
  LieValuedForm s_b;  // g, degree 1
  LieValuedForm S_b;  // e, degree 2
};

struct BasicTwoGauge {
  GroupElt E_b;
  LieValuedForm C_b;
};

/// Conjugation of connection data by a group element with shifted coordinate
/// data (gamma, Gamma, sigma, Sigma)-shaped: used both for basicification and
/// for the local matching laws.
TwoConnection twist_connection(const CrossedModule& cm, const TwoConnection& a, const GroupElt& p,
                               const LieValuedForm& gam, const LieValuedForm& sig,
                               const LieValuedForm& Sig);
OneGauge twist_gauge(const CrossedModule& cm, const OneGauge& psi, const GroupElt& p,
                     const LieValuedForm& gam, const LieValuedForm& sig, const LieValuedForm& Sig);
BasicTwoGauge twist_two_gauge(const CrossedModule& cm, const GroupElt& E, const LieValuedForm& C,
                              const GroupElt& p, const LieValuedForm& gam);

TwoConnection basicify_connection(const FieldStore& store, const TwoConnection& a,
                                  const AdaptedCoordinates& co);
OneGauge basicify_gauge(const FieldStore& store, const OneGauge& psi, const AdaptedCoordinates& co);
BasicTwoGauge basicify_two_gauge(const FieldStore& store, const TwoGauge& eps,
                                 const AdaptedCoordinates& co);

/// Matching components between two coordinate families ("primed" first, as in
/// f_b = gamma' gamma^{-1}).
MatchingData matching_data(const FieldStore& store, const AdaptedCoordinates& primed,
                           const AdaptedCoordinates& co);

// --- identity bundles ---------------------------------------------------------

/// Basicness plus the four structure equations of basic connection data.
std::vector<Check> basic_connection_checks(const FieldStore& store, const TwoConnection& b,
                                           const std::vector<std::map<SymId, Rational>>& bodies,
                                           const std::string& prefix);
std::vector<Check> basic_gauge_checks(const FieldStore& store, const OneGauge& b,
                                      const std::vector<std::map<SymId, Rational>>& bodies,
                                      const std::string& prefix);
std::vector<Check> basic_two_gauge_checks(const FieldStore& store, const BasicTwoGauge& b,
                                          const TwoConnection& basic_ref,
                                          const std::vector<std::map<SymId, Rational>>& bodies,
                                          const std::string& prefix);

/// Recovery of the matching shift components from the transformation ones.
std::vector<Check> matching_recovery_checks(const FieldStore& store, const MatchingData& m,
                                            const std::vector<std::map<SymId, Rational>>& bodies,
                                            const std::string& prefix);

}  // namespace hgt
