#pragma once

#include "hgt/liecm.hpp"

namespace hgt {

/// Element of the derived group e[1] x| G: a shift valued in e together with
/// a G body, the packed value being exp(alpha * shift) * body.
struct DerivedGroupElt {
  LieValuedForm shift;  // e-valued
  GroupElt body;        // G-valued
};

/// Element of the derived algebra: g-part of degree m, e-part of degree m+1.
struct DerivedAlgebraElt {
  LieValuedForm x;  // g-valued, the stated degree
  LieValuedForm X;  // e-valued, one degree higher
  int degree() const { return x.degree; }
};

DerivedGroupElt dm_identity(const CrossedModule& cm, const TablePtr& table);
DerivedGroupElt dm_mul(const CrossedModule& cm, const DerivedGroupElt& p, const DerivedGroupElt& q);
DerivedGroupElt dm_inverse(const CrossedModule& cm, const DerivedGroupElt& p);

DerivedAlgebraElt dm_zero(const CrossedModule& cm, int degree, const TablePtr& table);
DerivedAlgebraElt dm_add(const DerivedAlgebraElt& a, const DerivedAlgebraElt& b);
DerivedAlgebraElt dm_scale(const DerivedAlgebraElt& a, const Rational& c);

/// Bracket of the derived algebra: the shifted e-part is abelian, the g-part
/// acts through the crossed-module action.
DerivedAlgebraElt dm_bracket(const CrossedModule& cm, const DerivedAlgebraElt& z, const DerivedAlgebraElt& w);

/// Degree +1 coboundary induced by taudot; squares to zero.
DerivedAlgebraElt d_tau(const CrossedModule& cm, const DerivedAlgebraElt& z);

/// Adjoint action of a derived group element on the derived algebra.
DerivedAlgebraElt dm_ad(const CrossedModule& cm, const DerivedGroupElt& p, const DerivedAlgebraElt& z);

/// Packed realization: ring coefficient vectors over the g and e bases, with
/// pack(P)(alpha) = p + (-1)^deg alpha P'. The packed bracket uses the derived
/// algebra structure tensor (abelian shifted part).
struct PackedDm {
  std::vector<GradedScalar> g_coeff, e_coeff;
};

PackedDm pack_dm(const CrossedModule& cm, const DerivedAlgebraElt& z, SymId alpha);
DerivedAlgebraElt unpack_dm(const CrossedModule& cm, const PackedDm& p, SymId alpha, int degree,
                            const TablePtr& table);
PackedDm packed_bracket(const CrossedModule& cm, const PackedDm& a, const PackedDm& b);

/// Packed group value e^{alpha J} g realized in the affine representation of
/// e[1] x| G on e + R (translations by the shift, mudot on the body slot).
SMat dm_affine(const CrossedModule& cm, const DerivedGroupElt& p, SymId alpha);

}  // namespace hgt
