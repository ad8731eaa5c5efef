#pragma once

#include "hgt/basic.hpp"

namespace hgt {

/// Adapted coordinates of one patch; for derived patches the group coordinate
/// is a composite value rather than a registered field.
struct PatchCoords {
  GroupElt gamma;
  LieValuedForm Gamma, sigma, Sigma;
};

struct CoverOptions {
  size_t patches = 3;
  size_t base_dim = 2;
  int truncation = 6;
  bool special = false;          // special coordinates / special seed data
  size_t paraequivalences = 2;   // registered subordinated gauge seeds
  bool equivalence_shift = true; // register the pairwise shift seeds
  bool generic_pairs = true;     // perturb non-tree pairs (false: coboundary data)
};

using PairKey = std::pair<size_t, size_t>;

/// Paracocycle data: per-patch basic connection data with their base-level
/// counterparts, and per ordered pair the trivializer and base transition
/// data. The structure is independent of how the data were constructed.
struct ParaData {
  std::vector<LieValuedForm> omega_b, Omega_b;    // per patch, pullback data
  std::vector<LieValuedForm> omega_bar, Omega_bar;  // per patch, base data
  std::map<PairKey, GroupElt> T_b;   // trivializer
  std::map<PairKey, GroupElt> fbar;  // base transition
  std::map<PairKey, LieValuedForm> Fbar;
};

/// Gauge paraequivalence data subordinated to a paracocycle.
struct ParaEquivData {
  std::vector<GroupElt> g_b;       // per patch
  std::vector<LieValuedForm> J_b;  // per patch
  std::vector<GroupElt> gbar;      // per patch
  std::vector<LieValuedForm> Jbar;
  std::map<PairKey, GroupElt> Abar;  // per ordered pair
};

/// Finite trivializing cover: one store hosting adapted coordinates for every
/// patch (patch 0 registered, the others reached through base transition and
/// trivializer data), base connection seeds, and optional equivalence seeds.
class CoverModel {
 public:
  CoverModel(const CrossedModule& cm, const CoverOptions& opt, uint64_t seed);

  const FieldStore& store() const { return store_; }
  FieldStore& store() { return store_; }
  const CrossedModule& cm() const { return store_.cm(); }
  const CoverOptions& options() const { return opt_; }
  size_t patches() const { return opt_.patches; }
  const PatchCoords& coords(size_t i) const { return coords_.at(i); }

  /// Coordinate transition gamma_i gamma_j^{-1}.
  GroupElt f_coord(size_t i, size_t j) const;
  /// Coordinate matching shift Gamma_i - mudot(f_ij, Gamma_j).
  LieValuedForm F_coord(size_t i, size_t j) const;

  /// The constructed paracocycle.
  const ParaData& para() const { return para_; }
  /// The registered subordinated paraequivalences.
  const ParaEquivData& equivalence(size_t k) const { return equivs_.at(k); }
  size_t equivalence_count() const { return equivs_.size(); }

  /// Derived triple transition datum of a paracocycle.
  GroupElt Tbar(const ParaData& p, size_t i, size_t j, size_t k) const;
  /// Condition-2 value of the pair (i,j): Ad T(pi* Fbar) - mu(pi* omega_bar_i, T) - dT T^{-1}.
  LieValuedForm cond2_value(const ParaData& p, size_t i, size_t j) const;

  /// Restriction store for the object-space vanishing statements.
  const FieldStore& restricted() const { return *restricted_; }

  std::vector<std::map<SymId, Rational>> sample_bodies(int n, uint64_t seed) const;

  // -- operations ------------------------------------------------------------
  /// Gauge transform of the paracocycle by a subordinated paraequivalence.
  ParaData transform(const ParaData& p, const ParaEquivData& q) const;
  /// Equivalent paracocycle from the registered pairwise shifts.
  ParaData equivalent(const ParaData& p) const;
  const GroupElt& shift_seed(size_t i, size_t j) const;  // Tbar_ij, ordered i < j

  /// Composition and inverse of paraequivalences (pointwise on patches).
  ParaEquivData compose(const ParaEquivData& outer, const ParaEquivData& inner) const;
  ParaEquivData invert(const ParaEquivData& q) const;

  /// Strips a value and reports a witness when it is not base supported.
  std::string base_membership(const LieValuedForm& v) const;
  std::string base_membership_group(const GroupElt& p) const;

 private:
  CoverOptions opt_;
  FieldStore store_;
  std::vector<PatchCoords> coords_;
  ParaData para_;
  std::vector<ParaEquivData> equivs_;
  std::map<PairKey, GroupElt> shifts_;  // equivalence seeds, ordered pairs i < j
  std::vector<SymId> special_kill_;
  std::unique_ptr<FieldStore> restricted_;

  void build(uint64_t seed);
  ParaEquivData build_paraequivalence(const std::string& prefix);
};

// -- audit bundles -------------------------------------------------------------

/// Full paracocycle audit: fake flatness, basicness of the trivializer, the
/// three defining conditions, and the total-space transition cocycle.
std::vector<Check> paracocycle_audit(const CoverModel& cover, const ParaData& p,
                                     const std::vector<std::map<SymId, Rational>>& bodies,
                                     const std::string& prefix);

/// The induced base data form a differential cocycle: fake flatness, pair
/// matching, triple composition, transition consistency, and the tetrahedron
/// identity on four-fold intersections.
std::vector<Check> base_cocycle_checks(const CoverModel& cover, const ParaData& p,
                                       const std::vector<std::map<SymId, Rational>>& bodies,
                                       const std::string& prefix);

/// Subordination conditions and global matching of a paraequivalence.
std::vector<Check> paraequivalence_audit(const CoverModel& cover, const ParaData& p,
                                         const ParaEquivData& q,
                                         const std::vector<std::map<SymId, Rational>>& bodies,
                                         const std::string& prefix);

/// Transformed-paracocycle consistency: the transformed base data match the
/// displayed formulas and the underlying transition data are unchanged.
std::vector<Check> transform_checks(const CoverModel& cover, const ParaData& p, const ParaEquivData& q,
                                    const ParaData& tp,
                                    const std::vector<std::map<SymId, Rational>>& bodies,
                                    const std::string& prefix);

/// Equivalence consequences at the base level.
std::vector<Check> equivalence_checks(const CoverModel& cover, const ParaData& p, const ParaData& tp,
                                      const std::vector<std::map<SymId, Rational>>& bodies,
                                      const std::string& prefix);

/// Group law of subordinated paraequivalences, including the displayed barred
/// composition and inverse data.
std::vector<Check> paraequivalence_group_checks(const CoverModel& cover, const ParaData& p,
                                                const ParaEquivData& q1, const ParaEquivData& q2,
                                                const std::vector<std::map<SymId, Rational>>& bodies,
                                                const std::string& prefix);

/// Vanishing statements on special fixtures (or nonzero witnesses otherwise).
std::vector<Check> specialty_checks(const CoverModel& cover, const ParaData& p, const ParaEquivData* q,
                                    const std::vector<std::map<SymId, Rational>>& bodies,
                                    const std::string& prefix);

}  // namespace hgt
