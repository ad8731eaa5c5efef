#pragma once

#include <map>
#include <optional>
#include <set>

#include "hgt/liecm.hpp"
#include "hgt/report.hpp"

namespace hgt {

/// Derivation ordinals for the operation attached to a field store: the
/// differential d, then contractions j and Lie derivatives l indexed by a
/// basis of the derived algebra. Basis elements of the shifted part ("X
/// type") come in two marker slots so binary relation instances can use
/// independent contraction values.
struct DerivSet {
  size_t dim_g = 0, dim_e = 0;
  static constexpr size_t kSlots = 2;

  size_t count() const { return 1 + 2 * (dim_g + kSlots * dim_e); }
  size_t d() const { return 0; }
  size_t jx(size_t i) const { return 1 + i; }
  size_t jX(size_t a, size_t slot) const { return 1 + dim_g + slot * dim_e + a; }
  size_t lx(size_t i) const { return 1 + dim_g + kSlots * dim_e + i; }
  size_t lX(size_t a, size_t slot) const {
    return 1 + dim_g + kSlots * dim_e + dim_g + slot * dim_e + a;
  }
  bool is_j(size_t ord) const { return ord >= 1 && ord < 1 + dim_g + kSlots * dim_e; }
  bool is_l(size_t ord) const { return ord >= 1 + dim_g + kSlots * dim_e; }
  int op_degree(size_t ord) const { return ord == 0 ? 1 : (is_j(ord) ? -1 : 0); }
  std::string label(size_t ord) const;
};

/// Index data of a contraction/Lie derivation instance.
struct ZIndex {
  bool x_type = true;
  size_t index = 0;
  size_t slot = 0;  // marker slot for X-type instances
};

/// Registered group-valued field. Groups with a nilpotent-exponential model
/// are parametrized by exponential coordinates (degree-0 symbols), making the
/// inverse an exact polynomial; rational-point groups fall back to pattern
/// matrices of entry symbols with sampled bodies enforcing the inverse
/// relation at check time.
struct GroupField {
  std::string name;
  Target of = Target::G;
  GroupElt elt;
  bool coord_mode = true;
  std::vector<SymId> coords;                                                // coord_mode
  std::vector<std::pair<SymId, std::pair<size_t, size_t>>> entry_syms;      // pattern mode
  std::vector<std::pair<SymId, std::pair<size_t, size_t>>> inv_entry_syms;  // pattern mode
};

/// A named generator store with stored derivation images: the computational
/// form of an operation. Immutable once registration finishes; all checks
/// are read-only and safe to run in parallel.
class FieldStore {
 public:
  FieldStore(const CrossedModule& cm, int truncation);

  const CrossedModule& cm() const { return *cm_; }
  const TablePtr& table() const { return table_; }
  const DerivSet& derivs() const { return ds_; }

  // -- registration ----------------------------------------------------------
  LieValuedForm register_lie_field(const std::string& name, Target t, int degree);
  size_t register_group_field(const std::string& name, Target t);
  const GroupField& group(size_t idx) const { return groups_[idx]; }
  std::vector<SymId> register_scalars(const std::string& name, int degree, size_t n);

  void set_image(SymId sym, size_t ord, GradedScalar img);
  void set_form_image(const LieValuedForm& field_value, size_t ord, const LieValuedForm& img);
  /// Installs entry images of a group field from a Maurer-Cartan form:
  /// D(P) = mc^ * P (right orientation) or P * mc^ (left orientation).
  void set_group_mc(size_t group_idx, size_t ord, const LieValuedForm& mc, bool right_oriented);
  void mark_base(SymId sym) { base_.insert(sym); }
  void mark_base(const LieValuedForm& f);
  void mark_base_group(size_t idx);

  // -- evaluation --------------------------------------------------------------
  GradedScalar apply(size_t ord, const GradedScalar& v) const;
  LieValuedForm apply(size_t ord, const LieValuedForm& v) const;
  SMat apply(size_t ord, const SMat& v) const;
  /// Right Maurer-Cartan form D(P) P^{-1} of a group element.
  LieValuedForm right_mc(size_t ord, const GroupElt& p) const;
  /// Contraction value of an X-type index as an e-valued degree-1 form.
  LieValuedForm x_value(size_t a, size_t slot) const;
  /// Constant g-valued form of an x-type index.
  LieValuedForm x_basis(size_t i) const;

  const GradedScalar& image(SymId sym, size_t ord) const;
  size_t symbol_count() const { return images_.size(); }

  // -- bodies -------------------------------------------------------------------
  std::map<SymId, Rational> sample_bodies(Rng& rng) const;
  GradedScalar at_bodies(const GradedScalar& v, const std::map<SymId, Rational>& bodies) const;

  bool is_base(SymId sym) const { return base_.count(sym) > 0; }
  bool base_supported(const GradedScalar& v) const;
  bool base_supported(const LieValuedForm& v) const;

  const std::vector<GroupField>& group_fields() const { return groups_; }
  bool x_derivs_alive() const { return x_derivs_alive_; }

  /// Restriction morphism: kills the given symbols, drops X-indexed
  /// derivations, and checks the kill set is closed under the surviving
  /// derivations.
  FieldStore restricted(const std::vector<SymId>& kill) const;
  bool symbol_killed(SymId s) const { return killed_.count(s) > 0; }
  GradedScalar strip_killed(const GradedScalar& v) const;
  LieValuedForm strip_killed(const LieValuedForm& v) const;

 private:
  const CrossedModule* cm_;
  TablePtr table_;
  DerivSet ds_;
  std::vector<std::vector<GradedScalar>> images_;  // images_[sym][ord]
  std::vector<GroupField> groups_;
  std::set<SymId> base_;
  std::set<SymId> killed_;
  std::vector<SymId> markers_;
  bool x_derivs_alive_ = true;

  SymId add_symbol(const std::string& name, int degree);
};

/// Adapted coordinates of a trivializing patch: base pair (u, v), the fiber
/// group coordinate, and the shifted fiber coordinates.
struct AdaptedCoordinates {
  std::vector<SymId> u, v;
  size_t gamma = 0;  // index into store.group_fields()
  LieValuedForm Gamma;
  LieValuedForm sigma;
  LieValuedForm Sigma;
};

/// Registers a full set of adapted coordinates with fresh symbols, installing
/// the structure equations as derivation images. base_dim = 0 reuses the base
/// coordinates already present (registers none).
AdaptedCoordinates register_adapted(FieldStore& store, const std::string& prefix, size_t base_dim);

/// Per-generator exact verification of the six commutation relations of the
/// operation, evaluated at each sampled body assignment.
std::vector<Check> cartan_checks(const FieldStore& store,
                                 const std::vector<std::map<SymId, Rational>>& bodies,
                                 const std::string& id_prefix = "cartan");

std::string check_equal(const FieldStore& store, const GradedScalar& lhs, const GradedScalar& rhs,
                        const std::vector<std::map<SymId, Rational>>& bodies);
std::string check_equal(const FieldStore& store, const LieValuedForm& lhs, const LieValuedForm& rhs,
                        const std::vector<std::map<SymId, Rational>>& bodies);
std::string check_zero(const FieldStore& store, const LieValuedForm& v,
                       const std::vector<std::map<SymId, Rational>>& bodies);
std::string check_zero(const FieldStore& store, const SMat& v,
                       const std::vector<std::map<SymId, Rational>>& bodies);
/// A form annihilated by every contraction and Lie derivation at the bodies.
std::string check_basic(const FieldStore& store, const LieValuedForm& v,
                        const std::vector<std::map<SymId, Rational>>& bodies);
std::string check_basic_group(const FieldStore& store, const GroupElt& p,
                              const std::vector<std::map<SymId, Rational>>& bodies);

}  // namespace hgt
