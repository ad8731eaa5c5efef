#pragma once

#include "hgt/dga.hpp"

namespace hgt {

/// Connection data: either freshly registered fields or values produced by a
/// gauge action. The curvature pair is derived data throughout.
struct TwoConnection {
  LieValuedForm omega;  // g, degree 1
  LieValuedForm Omega;  // e, degree 2
  LieValuedForm theta;  // g, degree 2
  LieValuedForm Theta;  // e, degree 3
};

enum class ConnectionKind { Generic, FakeFlat, Flat };

/// Registers a 2-connection with fresh symbols and installs the twelve
/// operation relations as derivation images. FakeFlat pins theta = 0 with the
/// residual curvature constrained to the kernel of taudot; Flat pins both.
TwoConnection make_connection(FieldStore& store, const std::string& prefix, ConnectionKind kind);

struct OneGauge {
  GroupElt g;
  LieValuedForm J;  // e, degree 1
  LieValuedForm h;  // g, degree 1
  LieValuedForm K;  // e, degree 2
};

OneGauge make_one_gauge(FieldStore& store, const std::string& prefix);
OneGauge one_gauge_identity(FieldStore& store);

/// Group structure of 1-gauge transformations (shift components recomputed
/// from the defining relations of the composite).
OneGauge compose_one_gauge(const FieldStore& store, const OneGauge& outer, const OneGauge& inner);
OneGauge invert_one_gauge(const FieldStore& store, const OneGauge& psi);

/// Gauge transform of a 2-connection.
TwoConnection act_one_gauge(const FieldStore& store, const OneGauge& psi, const TwoConnection& a);

struct TwoGauge {
  GroupElt E;
  LieValuedForm C;  // e, degree 1
  int ref_id = 0;   // identity of the reference connection
};

TwoGauge make_two_gauge(FieldStore& store, const std::string& prefix, const TwoConnection& ref, int ref_id);
TwoGauge two_gauge_identity(FieldStore& store, int ref_id);

/// Transform of a 1-gauge transformation by a 2-gauge transformation with the
/// given reference connection. ref_id mismatches are refused.
OneGauge act_two_gauge(const FieldStore& store, const TwoGauge& eps, const OneGauge& psi,
                       const TwoConnection& ref, int ref_id);

// --- audits: every defining relation re-verified on arbitrary data -----------

std::vector<Check> connection_checks(const FieldStore& store, const TwoConnection& a,
                                     const std::vector<std::map<SymId, Rational>>& bodies,
                                     const std::string& prefix);
std::vector<Check> one_gauge_checks(const FieldStore& store, const OneGauge& psi,
                                    const std::vector<std::map<SymId, Rational>>& bodies,
                                    const std::string& prefix);
std::vector<Check> two_gauge_checks(const FieldStore& store, const TwoGauge& eps, const TwoConnection& ref,
                                    const std::vector<std::map<SymId, Rational>>& bodies,
                                    const std::string& prefix);

/// Symbols of a registered field (for restriction kill sets).
std::vector<SymId> form_symbols(const LieValuedForm& f);

/// Evaluates the restriction of the form in the given restricted store and
/// reports whether it vanishes (with a witness monomial otherwise).
std::string restriction_vanishes(const FieldStore& restricted, const LieValuedForm& v,
                                 const std::vector<std::map<SymId, Rational>>& bodies);

}  // namespace hgt
