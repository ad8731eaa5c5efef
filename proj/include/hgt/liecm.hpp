#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgt/linalg.hpp"

namespace hgt {

/// Lie algebra given by structure constants plus a faithful rational matrix
/// representation used for group bodies and adjoint actions.
struct LieAlgebraSpec {
  std::string name;
  size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<std::vector<Rational>>> c;  // c[i][j][k] of [e_i,e_j] = c^k e_k
  size_t rep_dim = 1;
  std::vector<RatMat> rep;  // one matrix per basis element
  RatMat extraction;        // coordinate functionals for span(rep)

  Rational structure(size_t i, size_t j, size_t k) const { return c[i][j][k]; }
  void finalize();  // fills extraction, checks antisymmetry/Jacobi/rep brackets
};

enum class Target { G, E };

enum class ActionKind { Trivial, Conjugation, LinearByBody };

/// How group bodies are sampled and parametrized symbolically.
enum class BodyModel { NilpotentExp, RationalPoints };

struct GroupModel {
  BodyModel model = BodyModel::NilpotentExp;
  std::vector<RatMat> points;                 // for RationalPoints
  std::vector<std::pair<size_t, size_t>> free_entries;  // symbol pattern for RationalPoints bodies
};

struct CrossedModule {
  std::string name;
  LieAlgebraSpec g, e;
  RatMat taudot;  // g.dim x e.dim
  ActionKind mu_kind = ActionKind::Trivial;
  GroupModel g_model, e_model;

  bool e_abelian = false;
  bool tau_identity = false;
  std::vector<RatMat> mudot2_mats;  // action of each g basis element on e coordinates

  const LieAlgebraSpec& alg(Target t) const { return t == Target::G ? g : e; }
  const GroupModel& model(Target t) const { return t == Target::G ? g_model : e_model; }
  void finalize();
};

/// Lie-algebra valued graded element: one ring coefficient per basis vector,
/// all homogeneous of the stated degree.
struct LieValuedForm {
  Target target = Target::G;
  int degree = 0;
  TablePtr table;
  std::vector<GradedScalar> coeff;

  bool is_zero() const {
    for (const auto& c : coeff)
      if (!c.is_zero()) return false;
    return true;
  }
  LieValuedForm operator+(const LieValuedForm& o) const;
  LieValuedForm operator-(const LieValuedForm& o) const;
  LieValuedForm operator-() const;
  LieValuedForm operator*(const Rational& r) const;
  bool operator==(const LieValuedForm& o) const {
    return target == o.target && coeff == o.coeff;
  }
  void check_degrees() const;
};

LieValuedForm lv_zero(const CrossedModule& cm, Target t, int degree, const TablePtr& table);

/// Group-valued element carried as a matrix over the ring together with its
/// exact inverse (group values always have even entries and invertible body).
struct GroupElt {
  Target of = Target::G;
  SMat m, minv;

  GroupElt() = default;
  GroupElt(Target t, SMat mm, SMat mi) : of(t), m(std::move(mm)), minv(std::move(mi)) {}
  static GroupElt identity(const CrossedModule& cm, Target t, const TablePtr& table);
  GroupElt operator*(const GroupElt& o) const;
  GroupElt inverse() const { return GroupElt(of, minv, m); }
};

// --- coordinate/matrix conversions -----------------------------------------

SMat form_hat(const CrossedModule& cm, const LieValuedForm& a);
LieValuedForm form_from_hat(const CrossedModule& cm, Target t, int degree, const SMat& m);

/// Identifies g-valued and e-valued data for conjugation crossed modules.
LieValuedForm retarget(const CrossedModule& cm, const LieValuedForm& a, Target t);

// --- algebra-level operations ----------------------------------------------

LieValuedForm bracket(const CrossedModule& cm, const LieValuedForm& a, const LieValuedForm& b);
LieValuedForm taudot(const CrossedModule& cm, const LieValuedForm& y);
/// The bilinear action of g on e.
LieValuedForm mudot2(const CrossedModule& cm, const LieValuedForm& x, const LieValuedForm& y);

// --- group-level operations -------------------------------------------------

GroupElt tau_group(const CrossedModule& cm, const GroupElt& q);
GroupElt mu_group(const CrossedModule& cm, const GroupElt& p, const GroupElt& q);
LieValuedForm ad_g(const CrossedModule& cm, const GroupElt& p, const LieValuedForm& a);
/// mudot: action of a G element on e-valued data.
LieValuedForm act_e(const CrossedModule& cm, const GroupElt& p, const LieValuedForm& y);
LieValuedForm ad_e(const CrossedModule& cm, const GroupElt& q, const LieValuedForm& y);
/// The map g x E -> e (derivative of a |-> mu(a, Q) Q^{-1} at the identity).
LieValuedForm coact(const CrossedModule& cm, const LieValuedForm& a, const GroupElt& q);
/// Log coordinates of an E element (requires abelian or unipotent model).
std::vector<GradedScalar> group_log_coords(const CrossedModule& cm, const GroupElt& q);

GroupElt group_exp(const CrossedModule& cm, Target t, const LieValuedForm& a);

/// Body sampling: exact rational group element plus its inverse.
std::pair<RatMat, RatMat> sample_body(const CrossedModule& cm, Target t, Rng& rng);

/// Maurer-Cartan value of a derivation on a group element whose entries are
/// ring polynomials: D(P) P^{-1} (right orientation) or P^{-1} D(P) (left).
/// Throws when the result does not lie in the algebra span.
LieValuedForm maurer(const CrossedModule& cm, const GroupElt& p,
                     const std::function<const GradedScalar*(SymId)>& image, int op_degree,
                     bool right_oriented = true);

// --- shipped instances -------------------------------------------------------

CrossedModule cm_trivial();      // CM-T: E = 1, G = Heisenberg
CrossedModule cm_conjugation();  // CM-C: E = G = Heisenberg, tau = id, mu = conj
CrossedModule cm_abelian_rep();  // CM-A: E = R^3, G = Heisenberg acting linearly
CrossedModule cm_central_tau();  // CM-H: E = R^2 abelian, tau into the center, mu trivial
const CrossedModule& shipped_cm(const std::string& id);

struct AxiomReport {
  struct Item {
    std::string axiom;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

AxiomReport check_crossed_module(const CrossedModule& cm, int samples, uint64_t seed);

}  // namespace hgt
