#include "hgt/derived.hpp"

namespace hgt {

DerivedGroupElt dm_identity(const CrossedModule& cm, const TablePtr& table) {
  return {lv_zero(cm, Target::E, 1, table), GroupElt::identity(cm, Target::G, table)};
}

DerivedGroupElt dm_mul(const CrossedModule& cm, const DerivedGroupElt& p, const DerivedGroupElt& q) {
  return {p.shift + act_e(cm, p.body, q.shift), p.body * q.body};
}

DerivedGroupElt dm_inverse(const CrossedModule& cm, const DerivedGroupElt& p) {
  GroupElt inv = p.body.inverse();
  return {-act_e(cm, inv, p.shift), inv};
}

DerivedAlgebraElt dm_zero(const CrossedModule& cm, int degree, const TablePtr& table) {
  return {lv_zero(cm, Target::G, degree, table), lv_zero(cm, Target::E, degree + 1, table)};
}

DerivedAlgebraElt dm_add(const DerivedAlgebraElt& a, const DerivedAlgebraElt& b) {
  return {a.x + b.x, a.X + b.X};
}

DerivedAlgebraElt dm_scale(const DerivedAlgebraElt& a, const Rational& c) {
  return {a.x * c, a.X * c};
}

DerivedAlgebraElt dm_bracket(const CrossedModule& cm, const DerivedAlgebraElt& z, const DerivedAlgebraElt& w) {
  int sign = ((z.degree() * w.degree()) & 1) ? -1 : 1;
  return {bracket(cm, z.x, w.x), mudot2(cm, z.x, w.X) - mudot2(cm, w.x, z.X) * Rational(sign)};
}

DerivedAlgebraElt d_tau(const CrossedModule& cm, const DerivedAlgebraElt& z) {
  TablePtr table = z.x.table ? z.x.table : z.X.table;
  for (const auto& c : z.x.coeff)
    if (!table && c.table()) table = c.table();
  for (const auto& c : z.X.coeff)
    if (!table && c.table()) table = c.table();
  LieValuedForm gpart = taudot(cm, z.X) * Rational((z.degree() & 1) ? -1 : 1);
  LieValuedForm epart = lv_zero(cm, Target::E, z.degree() + 2, table);
  return {gpart, epart};
}

DerivedAlgebraElt dm_ad(const CrossedModule& cm, const DerivedGroupElt& p, const DerivedAlgebraElt& z) {
  LieValuedForm gx = ad_g(cm, p.body, z.x);
  LieValuedForm ex = act_e(cm, p.body, z.X) - mudot2(cm, gx, p.shift);
  return {gx, ex};
}

PackedDm pack_dm(const CrossedModule& cm, const DerivedAlgebraElt& z, SymId alpha) {
  TablePtr table = z.x.table ? z.x.table : z.X.table;
  for (const auto& c : z.x.coeff)
    if (!table && c.table()) table = c.table();
  for (const auto& c : z.X.coeff)
    if (!table && c.table()) table = c.table();
  if (!table) throw error("pack_dm on detached element");
  if (!table->odd(alpha) || table->degree(alpha) != 1) throw error("packing symbol must be odd of degree 1");
  for (const auto& c : z.x.coeff)
    if (c.depends_on(alpha)) throw error("packing symbol collides with element data");
  for (const auto& c : z.X.coeff)
    if (c.depends_on(alpha)) throw error("packing symbol collides with element data");
  GradedScalar a = GradedScalar::generator(table, alpha);
  Rational sgn((z.degree() & 1) ? -1 : 1);
  PackedDm out;
  out.g_coeff = z.x.coeff;
  out.e_coeff.reserve(cm.e.dim);
  for (const auto& c : z.X.coeff) out.e_coeff.push_back(a * c * sgn);
  return out;
}

DerivedAlgebraElt unpack_dm(const CrossedModule& cm, const PackedDm& p, SymId alpha, int degree,
                            const TablePtr& table) {
  DerivedAlgebraElt z = dm_zero(cm, degree, table);
  Rational sgn((degree & 1) ? -1 : 1);
  for (size_t i = 0; i < p.g_coeff.size(); ++i) {
    auto [a0, a1] = p.g_coeff[i].split_odd(alpha);
    if (!a1.is_zero()) throw error("unpack_dm: packed g part depends on the packing symbol");
    z.x.coeff[i] = a0;
  }
  for (size_t i = 0; i < p.e_coeff.size(); ++i) {
    auto [a0, a1] = p.e_coeff[i].split_odd(alpha);
    if (!a0.is_zero()) throw error("unpack_dm: packed e part has an unpacked remainder");
    z.X.coeff[i] = a1 * sgn;
  }
  return z;
}

PackedDm packed_bracket(const CrossedModule& cm, const PackedDm& a, const PackedDm& b) {
  TablePtr table;
  for (const auto& c : a.g_coeff)
    if (c.table()) table = c.table();
  for (const auto& c : b.g_coeff)
    if (c.table()) table = c.table();
  for (const auto& c : a.e_coeff)
    if (c.table()) table = c.table();
  for (const auto& c : b.e_coeff)
    if (c.table()) table = c.table();
  if (!table) throw error("packed_bracket on detached elements");
  PackedDm out;
  out.g_coeff.assign(cm.g.dim, GradedScalar(table));
  out.e_coeff.assign(cm.e.dim, GradedScalar(table));
  for (size_t i = 0; i < cm.g.dim; ++i)
    for (size_t j = 0; j < cm.g.dim; ++j) {
      if (a.g_coeff[i].is_zero() || b.g_coeff[j].is_zero()) continue;
      GradedScalar prod = a.g_coeff[i] * b.g_coeff[j];
      for (size_t k = 0; k < cm.g.dim; ++k)
        if (cm.g.c[i][j][k] != 0) out.g_coeff[k] += prod * cm.g.c[i][j][k];
    }
  for (size_t i = 0; i < cm.g.dim; ++i)
    for (size_t c = 0; c < cm.e.dim; ++c) {
      if (!a.g_coeff[i].is_zero() && !b.e_coeff[c].is_zero()) {
        GradedScalar prod = a.g_coeff[i] * b.e_coeff[c];
        for (size_t bb = 0; bb < cm.e.dim; ++bb)
          if (cm.mudot2_mats[i](bb, c) != 0) out.e_coeff[bb] += prod * cm.mudot2_mats[i](bb, c);
      }
      if (!a.e_coeff[c].is_zero() && !b.g_coeff[i].is_zero()) {
        GradedScalar prod = a.e_coeff[c] * b.g_coeff[i];
        for (size_t bb = 0; bb < cm.e.dim; ++bb)
          if (cm.mudot2_mats[i](bb, c) != 0) out.e_coeff[bb] -= prod * cm.mudot2_mats[i](bb, c);
      }
    }
  // the shifted e part of the derived algebra is abelian: no e-e term
  return out;
}

SMat dm_affine(const CrossedModule& cm, const DerivedGroupElt& p, SymId alpha) {
  TablePtr table = p.body.m.table();
  size_t n = cm.e.dim;
  SMat out(table, n + 1, n + 1);
  // body slot acts by mudot
  switch (cm.mu_kind) {
    case ActionKind::Trivial:
      for (size_t i = 0; i < n; ++i) out(i, i) = GradedScalar::constant(table, 1);
      break;
    case ActionKind::LinearByBody:
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = p.body.m(i, j);
      break;
    case ActionKind::Conjugation: {
      // columns: coordinates of mudot(body, eps_j)
      for (size_t j = 0; j < n; ++j) {
        LieValuedForm unit = lv_zero(cm, Target::E, 0, table);
        unit.coeff[j] = GradedScalar::constant(table, 1);
        LieValuedForm moved = act_e(cm, p.body, unit);
        for (size_t i = 0; i < n; ++i) out(i, j) = moved.coeff[i];
      }
      break;
    }
  }
  GradedScalar a = GradedScalar::generator(table, alpha);
  for (size_t i = 0; i < n; ++i) out(i, n) = a * p.shift.coeff[i];
  out(n, n) = GradedScalar::constant(table, 1);
  return out;
}

}  // namespace hgt
