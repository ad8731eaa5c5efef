#include "hgt/cocycle.hpp"

#include <memory>
#include <sstream>

namespace hgt {

namespace {

/// Directions of e that are central and annihilated by the whole action: the
/// non-base content of quasi trivializers lives here, which keeps the base
/// data extractable while making the cocycle genuinely nontrivial.
std::vector<std::vector<Rational>> invariant_central_directions(const CrossedModule& cm) {
  size_t n = cm.e.dim;
  if (n == 0) return {};
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 0; i < cm.g.dim; ++i)
    for (size_t r = 0; r < n; ++r) {
      std::vector<Rational> row(n);
      for (size_t c = 0; c < n; ++c) row[c] = cm.mudot2_mats[i](r, c);
      rows.push_back(std::move(row));
    }
  for (size_t b = 0; b < n; ++b)
    for (size_t k = 0; k < n; ++k) {
      std::vector<Rational> row(n);
      for (size_t a = 0; a < n; ++a) row[a] = cm.e.c[a][b][k];
      rows.push_back(std::move(row));
    }
  size_t m = rows.size();
  RatMat a(m, n);
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < n; ++c) a(r, c) = rows[r][c];
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < m; ++c) {
    size_t piv = rank;
    while (piv < m && a(piv, c) == 0) ++piv;
    if (piv == m) continue;
    for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(rank, j));
    Rational d = a(rank, c);
    for (size_t j = 0; j < n; ++j) a(rank, j) /= d;
    for (size_t r = 0; r < m; ++r) {
      if (r == rank) continue;
      Rational f = a(r, c);
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j) a(r, j) -= f * a(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> kernel;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a(r, free);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

CoverModel::CoverModel(const CrossedModule& cm, const CoverOptions& opt, uint64_t seed)
    : opt_(opt), store_(cm, opt.truncation) {
  if (opt_.patches < 1) throw error("cover needs at least one patch");
  build(seed);
}

void CoverModel::build(uint64_t) {
  const CrossedModule& cm = store_.cm();
  const DerivSet& ds = store_.derivs();
  const size_t n = opt_.patches;
  const TablePtr& table = store_.table();

  // -- patch 0: registered adapted coordinates --------------------------------
  AdaptedCoordinates co0 = register_adapted(store_, "p0", opt_.base_dim);
  coords_.push_back({store_.group(co0.gamma).elt, co0.Gamma, co0.sigma, co0.Sigma});
  for (SymId s : form_symbols(co0.Gamma)) special_kill_.push_back(s);
  for (SymId s : form_symbols(co0.Sigma)) special_kill_.push_back(s);

  // -- base-level fake flat connection seed ------------------------------------
  LieValuedForm omega0 = store_.register_lie_field("cw", Target::G, 1);
  store_.mark_base(omega0);
  LieValuedForm Omega0 = lv_zero(cm, Target::E, 2, table);
  if (!opt_.special) {
    Omega0 = store_.register_lie_field("cW", Target::E, 2);
    store_.mark_base(Omega0);
  }
  store_.set_form_image(omega0, ds.d(),
                        bracket(cm, omega0, omega0) * Rational(-1, 2) + taudot(cm, Omega0));
  auto zdirs = invariant_central_directions(cm);
  if (!opt_.special) {
    // closed curvature remainder: invariant central directions inside ker(taudot)
    LieValuedForm Theta0 = lv_zero(cm, Target::E, 3, table);
    std::vector<std::vector<Rational>> closed;
    for (const auto& v : zdirs) {
      bool in_kernel = true;
      for (size_t k = 0; k < cm.g.dim; ++k) {
        Rational s = 0;
        for (size_t e = 0; e < cm.e.dim; ++e) s += cm.taudot(k, e) * v[e];
        if (s != 0) in_kernel = false;
      }
      if (in_kernel) closed.push_back(v);
    }
    if (!closed.empty()) {
      std::vector<SymId> ks = store_.register_scalars("cTh", 3, closed.size());
      for (size_t j = 0; j < closed.size(); ++j) {
        store_.mark_base(ks[j]);
        for (size_t e = 0; e < cm.e.dim; ++e)
          if (closed[j][e] != 0) Theta0.coeff[e] += GradedScalar::generator(table, ks[j]) * closed[j][e];
      }
    }
    store_.set_form_image(Omega0, ds.d(), -mudot2(cm, omega0, Omega0) + Theta0);
  }
  para_.omega_bar.push_back(omega0);
  para_.Omega_bar.push_back(Omega0);

  // -- helpers for registered base fields --------------------------------------
  auto base_group = [&](const std::string& name, Target t) {
    size_t idx = store_.register_group_field(name, t);
    store_.mark_base_group(idx);
    LieValuedForm mcf = store_.register_lie_field(name + "mc", t, 1);
    store_.mark_base(mcf);
    store_.set_form_image(mcf, ds.d(), bracket(cm, mcf, mcf) * Rational(1, 2));
    store_.set_group_mc(idx, ds.d(), mcf, /*right=*/true);
    return idx;
  };
  auto base_form_with_partner = [&](const std::string& name, Target t, int degree) {
    LieValuedForm f = store_.register_lie_field(name, t, degree);
    LieValuedForm p = store_.register_lie_field(name + "d", t, degree + 1);
    store_.mark_base(f);
    store_.mark_base(p);
    store_.set_form_image(f, ds.d(), p);
    return f;
  };
  auto central_elt = [&](const std::string& name) {
    GroupElt c = GroupElt::identity(cm, Target::E, table);
    if (zdirs.empty()) return c;
    SMat z(table, cm.e.rep_dim, cm.e.rep_dim);
    for (size_t r = 0; r < zdirs.size(); ++r) {
      std::vector<SymId> zc = store_.register_scalars(name + "_" + std::to_string(r) + "_", 0, 1);
      std::vector<SymId> zd = store_.register_scalars(name + "_" + std::to_string(r) + "_d", 1, 1);
      store_.set_image(zc[0], ds.d(), GradedScalar::generator(table, zd[0]));
      special_kill_.push_back(zc[0]);
      special_kill_.push_back(zd[0]);
      SMat dir(table, cm.e.rep_dim, cm.e.rep_dim);
      for (size_t e = 0; e < cm.e.dim; ++e)
        if (zdirs[r][e] != 0) dir = dir + SMat::from_rat(table, cm.e.rep[e]) * zdirs[r][e];
      z = z + dir * GradedScalar::generator(table, zc[0]);
    }
    return GroupElt(Target::E, exp_series(z), exp_series(-z));
  };

  // -- tree data 0 -> j ----------------------------------------------------------
  std::vector<GroupElt> fbar0{GroupElt::identity(cm, Target::G, table)};
  std::vector<GroupElt> T0{GroupElt::identity(cm, Target::E, table)};
  std::vector<LieValuedForm> Fbar0{lv_zero(cm, Target::E, 1, table)};
  std::vector<GroupElt> fb0{GroupElt::identity(cm, Target::G, table)};

  for (size_t j = 1; j < n; ++j) {
    size_t fidx = base_group("bf" + std::to_string(j), Target::G);
    size_t tidx = base_group("bt" + std::to_string(j), Target::E);
    GroupElt fbarj = store_.group(fidx).elt;
    GroupElt tbarj = store_.group(tidx).elt;
    GroupElt cj = central_elt("zz" + std::to_string(j));
    GroupElt Tj = cj * tbarj;
    LieValuedForm Fj;
    if (opt_.special) {
      // chosen so the object-space restriction of the pair shift vanishes
      LieValuedForm psi = store_.right_mc(ds.d(), tbarj);
      Fj = ad_e(cm, tbarj.inverse(), coact(cm, omega0, tbarj) + psi);
    } else {
      Fj = base_form_with_partner("bF" + std::to_string(j), Target::E, 1);
    }
    fbar0.push_back(fbarj);
    T0.push_back(Tj);
    Fbar0.push_back(Fj);
    fb0.push_back(tau_group(cm, Tj) * fbarj);
  }

  // -- non-tree pair perturbations ----------------------------------------------
  std::map<PairKey, GroupElt> sbar;
  if (opt_.generic_pairs)
    for (size_t i = 1; i + 1 < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        sbar[{i, j}] =
            store_.group(base_group("bs" + std::to_string(i) + std::to_string(j), Target::E)).elt;

  // -- per-patch barred data and derived coordinates ------------------------------
  std::vector<GroupElt> gammas{coords_[0].gamma};
  for (size_t j = 1; j < n; ++j) {
    LieValuedForm phi = store_.right_mc(ds.d(), fbar0[j]);
    LieValuedForm omj = ad_g(cm, fbar0[j].inverse(), para_.omega_bar[0] + phi + taudot(cm, Fbar0[j]));
    LieValuedForm dF = store_.apply(ds.d(), Fbar0[j]);
    LieValuedForm Omj = act_e(cm, fbar0[j].inverse(),
                              para_.Omega_bar[0] + dF + bracket(cm, Fbar0[j], Fbar0[j]) * Rational(1, 2) +
                                  mudot2(cm, para_.omega_bar[0], Fbar0[j]));
    para_.omega_bar.push_back(omj);
    para_.Omega_bar.push_back(Omj);

    // condition-2 value of the tree pair and the derived patch coordinates
    LieValuedForm rdT = store_.right_mc(ds.d(), T0[j]);
    LieValuedForm Fb0j = ad_e(cm, T0[j], Fbar0[j]) - coact(cm, para_.omega_bar[0], T0[j]) - rdT;
    GroupElt gam = fb0[j].inverse() * gammas[0];
    LieValuedForm Gam = act_e(cm, fb0[j].inverse(), coords_[0].Gamma - Fb0j);
    LieValuedForm sig =
        form_from_hat(cm, Target::G, 1, gam.minv * store_.apply(ds.d(), gam.m)) +
        taudot(cm, act_e(cm, gam.inverse(), Gam));
    LieValuedForm Sig = act_e(cm, gam.inverse(),
                              store_.apply(ds.d(), Gam) + bracket(cm, Gam, Gam) * Rational(1, 2));
    gammas.push_back(gam);
    coords_.push_back({gam, Gam, sig, Sig});
  }
  para_.omega_b = para_.omega_bar;
  para_.Omega_b = para_.Omega_bar;

  // -- ordered pair data -----------------------------------------------------------
  auto put_pair = [&](size_t i, size_t j, const GroupElt& T, const GroupElt& fb) {
    para_.T_b[{i, j}] = T;
    para_.fbar[{i, j}] = fb;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i < j) {
        GroupElt W = (i == 0) ? T0[j]
                              : mu_group(cm, fbar0[i].inverse(), T0[i].inverse() * T0[j]);
        GroupElt fb = fbar0[i].inverse() * fbar0[j];
        if (i > 0 && sbar.count({i, j})) {
          const GroupElt& s = sbar[{i, j}];
          W = W * s;
          fb = tau_group(cm, s).inverse() * fb;
        }
        put_pair(i, j, W, fb);
      }
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) {
      const GroupElt& Tij = para_.T_b[{j, i}];
      const GroupElt& fij = para_.fbar[{j, i}];
      put_pair(i, j, mu_group(cm, fij.inverse(), Tij.inverse()), fij.inverse());
    }

  // -- base transition shift data ---------------------------------------------------
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const GroupElt& T = para_.T_b[{i, j}];
      LieValuedForm rdT = store_.right_mc(ds.d(), T);
      para_.Fbar[{i, j}] = ad_e(cm, T.inverse(),
                                F_coord(i, j) + coact(cm, para_.omega_bar[i], T) + rdT);
    }

  // -- paraequivalences ---------------------------------------------------------------
  for (size_t q = 0; q < opt_.paraequivalences; ++q)
    equivs_.push_back(build_paraequivalence("q" + std::to_string(q)));

  // -- equivalence shift seeds ----------------------------------------------------------
  if (opt_.equivalence_shift)
    for (size_t i = 0; i + 1 < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        shifts_[{i, j}] =
            store_.group(base_group("sh" + std::to_string(i) + std::to_string(j), Target::E)).elt;

  restricted_ = std::make_unique<FieldStore>(store_.restricted(special_kill_));
}

ParaEquivData CoverModel::build_paraequivalence(const std::string& prefix) {
  const CrossedModule& cm = store_.cm();
  const DerivSet& ds = store_.derivs();
  const size_t n = opt_.patches;
  ParaEquivData q;

  size_t gidx = store_.register_group_field(prefix + "g", Target::G);
  store_.mark_base_group(gidx);
  LieValuedForm chi = store_.register_lie_field(prefix + "gmc", Target::G, 1);
  store_.mark_base(chi);
  store_.set_form_image(chi, ds.d(), bracket(cm, chi, chi) * Rational(1, 2));
  store_.set_group_mc(gidx, ds.d(), chi, /*right=*/true);
  GroupElt g0 = store_.group(gidx).elt;

  LieValuedForm J0 = lv_zero(cm, Target::E, 1, store_.table());
  if (!opt_.special) {
    J0 = store_.register_lie_field(prefix + "J", Target::E, 1);
    LieValuedForm J0p = store_.register_lie_field(prefix + "Jd", Target::E, 2);
    store_.mark_base(J0);
    store_.mark_base(J0p);
    store_.set_form_image(J0, ds.d(), J0p);
  }

  q.g_b.push_back(g0);
  q.J_b.push_back(J0);
  for (size_t j = 1; j < n; ++j) {
    GroupElt fb = tau_group(cm, para_.T_b.at({0, j})) * para_.fbar.at({0, j});
    LieValuedForm Fb = cond2_value(para_, 0, j);
    q.g_b.push_back(fb.inverse() * g0 * fb);
    q.J_b.push_back(act_e(cm, fb.inverse(), J0 - Fb + act_e(cm, g0, Fb)));
  }
  q.gbar = q.g_b;
  q.Jbar = q.J_b;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const GroupElt& T = para_.T_b.at({i, j});
      q.Abar[{i, j}] = mu_group(cm, q.g_b[i], T.inverse()) * T;
    }
  return q;
}

GroupElt CoverModel::f_coord(size_t i, size_t j) const {
  return coords_.at(i).gamma * coords_.at(j).gamma.inverse();
}

LieValuedForm CoverModel::F_coord(size_t i, size_t j) const {
  const CrossedModule& cm = store_.cm();
  if (i == j) return lv_zero(cm, Target::E, 1, store_.table());
  const GroupElt& T = para_.T_b.at({i, j});
  GroupElt fb = tau_group(cm, T) * para_.fbar.at({i, j});
  return coords_.at(i).Gamma - act_e(cm, fb, coords_.at(j).Gamma);
}

GroupElt CoverModel::Tbar(const ParaData& p, size_t i, size_t j, size_t k) const {
  const CrossedModule& cm = store_.cm();
  GroupElt fij = tau_group(cm, p.T_b.at({i, j})) * p.fbar.at({i, j});
  return p.T_b.at({i, k}).inverse() * mu_group(cm, fij, p.T_b.at({j, k})) * p.T_b.at({i, j});
}

LieValuedForm CoverModel::cond2_value(const ParaData& p, size_t i, size_t j) const {
  const CrossedModule& cm = store_.cm();
  const GroupElt& T = p.T_b.at({i, j});
  LieValuedForm rdT = store_.right_mc(store_.derivs().d(), T);
  return ad_e(cm, T, p.Fbar.at({i, j})) - coact(cm, p.omega_bar[i], T) - rdT;
}

std::vector<std::map<SymId, Rational>> CoverModel::sample_bodies(int n, uint64_t seed) const {
  Rng rng(seed);
  std::vector<std::map<SymId, Rational>> out;
  for (int i = 0; i < n; ++i) out.push_back(store_.sample_bodies(rng));
  return out;
}

ParaData CoverModel::transform(const ParaData& p, const ParaEquivData& q) const {
  const CrossedModule& cm = store_.cm();
  const DerivSet& ds = store_.derivs();
  ParaData out = p;
  for (size_t i = 0; i < patches(); ++i) {
    LieValuedForm rg = store_.right_mc(ds.d(), q.g_b[i]);
    LieValuedForm om = ad_g(cm, q.g_b[i], p.omega_b[i]) - rg - taudot(cm, q.J_b[i]);
    LieValuedForm Om = act_e(cm, q.g_b[i], p.Omega_b[i]) - store_.apply(ds.d(), q.J_b[i]) -
                       bracket(cm, q.J_b[i], q.J_b[i]) * Rational(1, 2) - mudot2(cm, om, q.J_b[i]);
    out.omega_b[i] = om;
    out.Omega_b[i] = Om;
    out.omega_bar[i] = om;
    out.Omega_bar[i] = Om;
  }
  // transition data unchanged; base shift data re-derived for the new seed
  for (auto& [key, F] : out.Fbar) {
    const GroupElt& T = out.T_b.at(key);
    LieValuedForm rdT = store_.right_mc(ds.d(), T);
    F = ad_e(cm, T.inverse(), F_coord(key.first, key.second) +
                                   coact(cm, out.omega_bar[key.first], T) + rdT);
  }
  return out;
}

const GroupElt& CoverModel::shift_seed(size_t i, size_t j) const {
  auto it = shifts_.find({i, j});
  if (it == shifts_.end()) throw error("equivalence shift seeds were not registered");
  return it->second;
}

ParaData CoverModel::equivalent(const ParaData& p) const {
  const CrossedModule& cm = store_.cm();
  const DerivSet& ds = store_.derivs();
  ParaData out = p;
  for (size_t i = 0; i + 1 < patches(); ++i)
    for (size_t j = i + 1; j < patches(); ++j) {
      const GroupElt& sh = shift_seed(i, j);
      out.T_b[{i, j}] = p.T_b.at({i, j}) * sh.inverse();
      out.fbar[{i, j}] = tau_group(cm, sh) * p.fbar.at({i, j});
      // reversed pair from the inverse relation
      out.fbar[{j, i}] = out.fbar[{i, j}].inverse();
      out.T_b[{j, i}] = mu_group(cm, out.fbar[{i, j}].inverse(), out.T_b[{i, j}].inverse());
    }
  for (auto& [key, F] : out.Fbar) {
    const GroupElt& T = out.T_b.at(key);
    LieValuedForm rdT = store_.right_mc(ds.d(), T);
    F = ad_e(cm, T.inverse(), F_coord(key.first, key.second) +
                                   coact(cm, out.omega_bar[key.first], T) + rdT);
  }
  return out;
}

ParaEquivData CoverModel::compose(const ParaEquivData& outer, const ParaEquivData& inner) const {
  const CrossedModule& cm = store_.cm();
  ParaEquivData out;
  for (size_t i = 0; i < patches(); ++i) {
    out.g_b.push_back(outer.g_b[i] * inner.g_b[i]);
    out.J_b.push_back(outer.J_b[i] + act_e(cm, outer.g_b[i], inner.J_b[i]));
  }
  out.gbar = out.g_b;
  out.Jbar = out.J_b;
  for (size_t i = 0; i < patches(); ++i)
    for (size_t j = 0; j < patches(); ++j) {
      if (i == j) continue;
      const GroupElt& T = para_.T_b.at({i, j});
      out.Abar[{i, j}] = mu_group(cm, out.g_b[i], T.inverse()) * T;
    }
  return out;
}

ParaEquivData CoverModel::invert(const ParaEquivData& q) const {
  const CrossedModule& cm = store_.cm();
  ParaEquivData out;
  for (size_t i = 0; i < patches(); ++i) {
    GroupElt gi = q.g_b[i].inverse();
    out.g_b.push_back(gi);
    out.J_b.push_back(-act_e(cm, gi, q.J_b[i]));
  }
  out.gbar = out.g_b;
  out.Jbar = out.J_b;
  for (size_t i = 0; i < patches(); ++i)
    for (size_t j = 0; j < patches(); ++j) {
      if (i == j) continue;
      const GroupElt& T = para_.T_b.at({i, j});
      out.Abar[{i, j}] = mu_group(cm, out.g_b[i], T.inverse()) * T;
    }
  return out;
}

std::string CoverModel::base_membership(const LieValuedForm& v) const {
  for (size_t k = 0; k < v.coeff.size(); ++k)
    if (!store_.base_supported(v.coeff[k]))
      return "component " + std::to_string(k + 1) + " uses non-base symbols";
  return "";
}

std::string CoverModel::base_membership_group(const GroupElt& p) const {
  for (size_t r = 0; r < p.m.rows(); ++r)
    for (size_t c = 0; c < p.m.cols(); ++c)
      if (!store_.base_supported(p.m(r, c)) || !store_.base_supported(p.minv(r, c)))
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") uses non-base symbols";
  return "";
}

// --- audits -----------------------------------------------------------------------

namespace {
using Bodies = std::vector<std::map<SymId, Rational>>;

void add(std::vector<Check>& out, const std::string& id, const std::string& name,
         std::function<std::string()> fn) {
  out.push_back({id, name, std::move(fn)});
}

std::string pair_tag(size_t i, size_t j) { return std::to_string(i) + std::to_string(j); }
}  // namespace

std::vector<Check> paracocycle_audit(const CoverModel& cover, const ParaData& p, const Bodies& bodies,
                                     const std::string& prefix) {
  const FieldStore& store = cover.store();
  const CrossedModule& cm = cover.cm();
  const DerivSet& ds = store.derivs();
  size_t n = cover.patches();
  std::vector<Check> out;

  for (size_t i = 0; i < n; ++i) {
    add(out, prefix + ".fakeflat." + std::to_string(i), "fake flatness of the patch connection data",
        [=, &store, &cm] {
          LieValuedForm res = store.apply(ds.d(), p.omega_b[i]) +
                              bracket(cm, p.omega_b[i], p.omega_b[i]) * Rational(1, 2) -
                              taudot(cm, p.Omega_b[i]);
          return check_zero(store, res, bodies);
        });
    add(out, prefix + ".cond1." + std::to_string(i), "patch data descend from base data",
        [=, &cover, &store] {
          std::string w = cover.base_membership(p.omega_bar[i]);
          if (w.empty()) w = cover.base_membership(p.Omega_bar[i]);
          if (w.empty()) w = check_equal(store, p.omega_b[i], p.omega_bar[i], bodies);
          if (w.empty()) w = check_equal(store, p.Omega_b[i], p.Omega_bar[i], bodies);
          return w;
        });
    add(out, prefix + ".basiccoord." + std::to_string(i), "patch basic data are basic",
        [=, &store] {
          std::string w = check_basic(store, p.omega_b[i], bodies);
          if (w.empty()) w = check_basic(store, p.Omega_b[i], bodies);
          return w;
        });
  }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      add(out, prefix + ".trivializer." + pair_tag(i, j), "quasi trivializer is basic",
          [=, &store] { return check_basic_group(store, p.T_b.at({i, j}), bodies); });
      add(out, prefix + ".cond2." + pair_tag(i, j),
          "pair transition data decompose through the trivializer", [=, &cover, &store, &cm] {
            const GroupElt& T = p.T_b.at({i, j});
            GroupElt fb = tau_group(cm, T) * p.fbar.at({i, j});
            std::string w = cover.base_membership_group(p.fbar.at({i, j}));
            if (w.empty()) w = cover.base_membership(p.Fbar.at({i, j}));
            if (w.empty()) w = check_zero(store, fb.m - cover.f_coord(i, j).m, bodies);
            if (w.empty())
              w = check_equal(store, cover.F_coord(i, j), cover.cond2_value(p, i, j), bodies);
            return w;
          });
    }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        add(out, prefix + ".cech." + pair_tag(i, j) + std::to_string(k),
            "transition data form a cocycle on triple overlaps", [=, &cover, &store, &cm] {
              GroupElt fij = tau_group(cm, p.T_b.at({i, j})) * p.fbar.at({i, j});
              GroupElt fjk = tau_group(cm, p.T_b.at({j, k})) * p.fbar.at({j, k});
              GroupElt fik = tau_group(cm, p.T_b.at({i, k})) * p.fbar.at({i, k});
              std::string w = check_zero(store, fik.m - (fij * fjk).m, bodies);
              if (w.empty())
                w = check_equal(store, cover.F_coord(i, k),
                                cover.F_coord(i, j) + act_e(cm, fij, cover.F_coord(j, k)), bodies);
              return w;
            });
        add(out, prefix + ".cond3." + pair_tag(i, j) + std::to_string(k),
            "triple trivializer comparison descends to the base", [=, &cover] {
              return cover.base_membership_group(cover.Tbar(p, i, j, k));
            });
      }
  return out;
}

std::vector<Check> base_cocycle_checks(const CoverModel& cover, const ParaData& p, const Bodies& bodies,
                                       const std::string& prefix) {
  const FieldStore& store = cover.store();
  const CrossedModule& cm = cover.cm();
  const DerivSet& ds = store.derivs();
  size_t n = cover.patches();
  std::vector<Check> out;

  for (size_t i = 0; i < n; ++i)
    add(out, prefix + ".fakeflat." + std::to_string(i), "fake flatness of the base connection data",
        [=, &store, &cm] {
          LieValuedForm res = store.apply(ds.d(), p.omega_bar[i]) +
                              bracket(cm, p.omega_bar[i], p.omega_bar[i]) * Rational(1, 2) -
                              taudot(cm, p.Omega_bar[i]);
          return check_zero(store, res, bodies);
        });

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      add(out, prefix + ".match." + pair_tag(i, j), "base connection data match across patches",
          [=, &store, &cm] {
            const GroupElt& f = p.fbar.at({i, j});
            const LieValuedForm& F = p.Fbar.at({i, j});
            LieValuedForm rf = store.right_mc(ds.d(), f);
            std::string w = check_equal(
                store, p.omega_bar[i],
                ad_g(cm, f, p.omega_bar[j]) - rf - taudot(cm, F), bodies);
            if (w.empty())
              w = check_equal(store, p.Omega_bar[i],
                              act_e(cm, f, p.Omega_bar[j]) - store.apply(ds.d(), F) -
                                  bracket(cm, F, F) * Rational(1, 2) -
                                  mudot2(cm, p.omega_bar[i], F),
                              bodies);
            return w;
          });
    }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        add(out, prefix + ".comp." + pair_tag(i, j) + std::to_string(k),
            "triple composition of base transition data", [=, &cover, &store, &cm] {
              GroupElt Tijk = cover.Tbar(p, i, j, k);
              GroupElt want = tau_group(cm, Tijk) * p.fbar.at({i, j}) * p.fbar.at({j, k});
              std::string w = check_zero(store, p.fbar.at({i, k}).m - want.m, bodies);
              if (w.empty()) {
                LieValuedForm rT = store.right_mc(ds.d(), Tijk);
                LieValuedForm wantF =
                    ad_e(cm, Tijk,
                         p.Fbar.at({i, j}) + act_e(cm, p.fbar.at({i, j}), p.Fbar.at({j, k}))) -
                    coact(cm, p.omega_bar[i], Tijk) - rT;
                w = check_equal(store, p.Fbar.at({i, k}), wantF, bodies);
              }
              return w;
            });
      }

  if (n >= 4)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
          for (size_t l = 0; l < n; ++l) {
            if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
            add(out, prefix + ".tetra." + pair_tag(i, j) + pair_tag(k, l),
                "tetrahedron identity on four-fold overlaps", [=, &cover, &store, &cm] {
                  GroupElt lhs = cover.Tbar(p, i, k, l) * cover.Tbar(p, i, j, k);
                  GroupElt rhs = cover.Tbar(p, i, j, l) *
                                 mu_group(cm, p.fbar.at({i, j}), cover.Tbar(p, j, k, l));
                  return check_zero(store, lhs.m - rhs.m, bodies);
                });
          }
  return out;
}

std::vector<Check> paraequivalence_audit(const CoverModel& cover, const ParaData& p,
                                         const ParaEquivData& q, const Bodies& bodies,
                                         const std::string& prefix) {
  const FieldStore& store = cover.store();
  const CrossedModule& cm = cover.cm();
  size_t n = cover.patches();
  std::vector<Check> out;

  for (size_t i = 0; i < n; ++i) {
    add(out, prefix + ".cond12." + std::to_string(i), "local gauge data descend from base data",
        [=, &cover] {
          std::string w = cover.base_membership_group(q.gbar[i]);
          if (w.empty()) w = cover.base_membership(q.Jbar[i]);
          return w;
        });
    add(out, prefix + ".basic." + std::to_string(i), "local gauge data are basic", [=, &store] {
      std::string w = check_basic_group(store, q.g_b[i], bodies);
      if (w.empty()) w = check_basic(store, q.J_b[i], bodies);
      return w;
    });
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      add(out, prefix + ".cond3." + pair_tag(i, j), "pairing with the trivializer descends",
          [=, &cover] { return cover.base_membership_group(q.Abar.at({i, j})); });
      add(out, prefix + ".matchg." + pair_tag(i, j), "local gauge data match across patches",
          [=, &cover, &store, &cm] {
            GroupElt fij = tau_group(cm, p.T_b.at({i, j})) * p.fbar.at({i, j});
            std::string w =
                check_zero(store, q.g_b[i].m - (fij * q.g_b[j] * fij.inverse()).m, bodies);
            if (w.empty()) {
              LieValuedForm want = act_e(cm, fij, q.J_b[j]) + cover.F_coord(i, j) -
                                   act_e(cm, q.g_b[i], cover.F_coord(i, j));
              w = check_equal(store, q.J_b[i], want, bodies);
            }
            return w;
          });
      add(out, prefix + ".matchbar." + pair_tag(i, j), "base gauge data match across patches",
          [=, &store, &cm] {
            // gbar_i = tau(Abar_ij) fbar_ij gbar_j fbar_ij^{-1}
            GroupElt want = tau_group(cm, q.Abar.at({i, j})) * p.fbar.at({i, j}) * q.gbar[j] *
                            p.fbar.at({i, j}).inverse();
            return check_zero(store, q.gbar[i].m - want.m, bodies);
          });
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        add(out, prefix + ".tripleA." + pair_tag(i, j) + std::to_string(k),
            "triple comparison of the pairing data", [=, &cover, &store, &cm] {
              GroupElt want = mu_group(cm, q.gbar[i], cover.Tbar(p, i, j, k)) * q.Abar.at({i, j}) *
                              mu_group(cm, p.fbar.at({i, j}), q.Abar.at({j, k})) *
                              cover.Tbar(p, i, j, k).inverse();
              return check_zero(store, q.Abar.at({i, k}).m - want.m, bodies);
            });
      }
  return out;
}

std::vector<Check> transform_checks(const CoverModel& cover, const ParaData& p, const ParaEquivData& q,
                                    const ParaData& tp, const Bodies& bodies, const std::string& prefix) {
  const FieldStore& store = cover.store();
  const CrossedModule& cm = cover.cm();
  const DerivSet& ds = store.derivs();
  size_t n = cover.patches();
  std::vector<Check> out;

  for (size_t i = 0; i < n; ++i)
    add(out, prefix + ".base." + std::to_string(i), "transformed base connection data as displayed",
        [=, &store, &cm] {
          LieValuedForm rg = store.right_mc(ds.d(), q.gbar[i]);
          LieValuedForm want_om =
              ad_g(cm, q.gbar[i], p.omega_bar[i]) - rg - taudot(cm, q.Jbar[i]);
          std::string w = check_equal(store, tp.omega_bar[i], want_om, bodies);
          if (w.empty()) {
            LieValuedForm want_Om = act_e(cm, q.gbar[i], p.Omega_bar[i]) -
                                    store.apply(ds.d(), q.Jbar[i]) -
                                    bracket(cm, q.Jbar[i], q.Jbar[i]) * Rational(1, 2) -
                                    mudot2(cm, want_om, q.Jbar[i]);
            w = check_equal(store, tp.Omega_bar[i], want_Om, bodies);
          }
          return w;
        });
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      add(out, prefix + ".trans." + pair_tag(i, j),
          "transition data unchanged, shift data as displayed", [=, &cover, &store, &cm] {
            std::string w = check_zero(store, tp.fbar.at({i, j}).m - p.fbar.at({i, j}).m, bodies);
            if (w.empty())
              w = check_zero(store, tp.T_b.at({i, j}).m - p.T_b.at({i, j}).m, bodies);
            if (w.empty()) {
              // gF_ij = Ad Abar^-1(Jbar_i + mudot(gbar_i, Fbar_ij)) - mudot(fbar_ij, Jbar_j)
              //         - mu(gomega_i, Abar^-1) - d Abar^-1 Abar
              const GroupElt& A = q.Abar.at({i, j});
              GroupElt Ainv = A.inverse();
              LieValuedForm dAinv =
                  form_from_hat(cm, Target::E, 1, store.apply(ds.d(), Ainv.m) * A.m);
              LieValuedForm want = ad_e(cm, Ainv,
                                        q.Jbar[i] + act_e(cm, q.gbar[i], p.Fbar.at({i, j}))) -
                                   act_e(cm, p.fbar.at({i, j}), q.Jbar[j]) -
                                   coact(cm, tp.omega_bar[i], Ainv) - dAinv;
              w = check_equal(store, tp.Fbar.at({i, j}), want, bodies);
            }
            return w;
          });
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        add(out, prefix + ".tbar." + pair_tag(i, j) + std::to_string(k),
            "triple transition data unchanged", [=, &cover, &store] {
              return check_zero(store, cover.Tbar(tp, i, j, k).m - cover.Tbar(p, i, j, k).m, bodies);
            });
      }
  return out;
}

std::vector<Check> equivalence_checks(const CoverModel& cover, const ParaData& p, const ParaData& tp,
                                      const Bodies& bodies, const std::string& prefix) {
  const FieldStore& store = cover.store();
  const CrossedModule& cm = cover.cm();
  const DerivSet& ds = store.derivs();
  size_t n = cover.patches();
  std::vector<Check> out;

  for (size_t i = 0; i < n; ++i)
    add(out, prefix + ".conn." + std::to_string(i), "equivalent paracocycles share connection data",
        [=, &store] {
          std::string w = check_equal(store, tp.omega_b[i], p.omega_b[i], bodies);
          if (w.empty()) w = check_equal(store, tp.Omega_b[i], p.Omega_b[i], bodies);
          return w;
        });
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      add(out, prefix + ".shiftpair." + pair_tag(i, j),
          "trivializers differ by a base shift on every pair", [=, &cover] {
            GroupElt ratio = tp.T_b.at({i, j}).inverse() * p.T_b.at({i, j});
            return cover.base_membership_group(ratio);
          });
    }
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      add(out, prefix + ".consequence." + pair_tag(i, j),
          "equivalent base transition data as displayed", [=, &cover, &store, &cm] {
            const GroupElt& sh = cover.shift_seed(i, j);
            GroupElt wantf = tau_group(cm, sh) * p.fbar.at({i, j});
            std::string w = check_zero(store, tp.fbar.at({i, j}).m - wantf.m, bodies);
            if (w.empty()) {
              LieValuedForm rsh = store.right_mc(ds.d(), sh);
              LieValuedForm wantF = ad_e(cm, sh, p.Fbar.at({i, j})) -
                                    coact(cm, tp.omega_bar[i], sh) - rsh;
              w = check_equal(store, tp.Fbar.at({i, j}), wantF, bodies);
            }
            return w;
          });
    }
  if (n >= 3)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          if (i > j || j > k) continue;  // shifts are seeded on ordered pairs
          add(out, prefix + ".tbar." + pair_tag(i, j) + std::to_string(k),
              "equivalent triple data as displayed", [=, &cover, &store, &cm] {
                GroupElt want = cover.shift_seed(i, k) * cover.Tbar(p, i, j, k) *
                                mu_group(cm, p.fbar.at({i, j}), cover.shift_seed(j, k).inverse()) *
                                cover.shift_seed(i, j).inverse();
                return check_zero(store, cover.Tbar(tp, i, j, k).m - want.m, bodies);
              });
        }
  return out;
}

std::vector<Check> paraequivalence_group_checks(const CoverModel& cover, const ParaData& p,
                                                const ParaEquivData& q1, const ParaEquivData& q2,
                                                const Bodies& bodies, const std::string& prefix) {
  const FieldStore& store = cover.store();
  const CrossedModule& cm = cover.cm();
  size_t n = cover.patches();
  std::vector<Check> out;

  ParaEquivData comp = cover.compose(q2, q1);
  ParaEquivData inv = cover.invert(q1);
  ParaEquivData round = cover.compose(q1, inv);

  for (size_t i = 0; i < n; ++i)
    add(out, prefix + ".roundtrip." + std::to_string(i), "composition with the inverse is trivial",
        [=, &store] {
          std::string w =
              check_zero(store, round.g_b[i].m - SMat::identity(store.table(), cm.g.rep_dim), bodies);
          if (w.empty()) w = check_zero(store, round.J_b[i], bodies);
          return w;
        });
  // subordination of composite and inverse
  auto sub = paraequivalence_audit(cover, p, comp, bodies, prefix + ".comp");
  out.insert(out.end(), sub.begin(), sub.end());
  auto sub2 = paraequivalence_audit(cover, p, inv, bodies, prefix + ".inv");
  out.insert(out.end(), sub2.begin(), sub2.end());

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      add(out, prefix + ".Acomp." + pair_tag(i, j), "pairing data of the composite as displayed",
          [=, &store, &cm] {
            GroupElt want = mu_group(cm, q2.gbar[i], q1.Abar.at({i, j})) * q2.Abar.at({i, j});
            return check_zero(store, comp.Abar.at({i, j}).m - want.m, bodies);
          });
      add(out, prefix + ".Ainv." + pair_tag(i, j), "pairing data of the inverse as displayed",
          [=, &store, &cm] {
            GroupElt want = mu_group(cm, q1.gbar[i].inverse(), q1.Abar.at({i, j}).inverse());
            return check_zero(store, inv.Abar.at({i, j}).m - want.m, bodies);
          });
    }
  return out;
}

std::vector<Check> specialty_checks(const CoverModel& cover, const ParaData& p, const ParaEquivData* q,
                                    const Bodies& bodies, const std::string& prefix) {
  const FieldStore& store = cover.store();
  const FieldStore& restr = cover.restricted();
  size_t n = cover.patches();
  bool special = cover.options().special;
  std::vector<Check> out;

  auto expect = [special](std::string w) -> std::string {
    if (special) return w;                           // must vanish
    return w.empty() ? "expected a nonzero witness" : "";  // must not vanish
  };

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      add(out, prefix + ".F." + pair_tag(i, j),
          special ? "restricted pair shift data vanish" : "generic pair shift data have witnesses",
          [=, &cover, &restr] { return expect(restriction_vanishes(restr, cover.F_coord(i, j), bodies)); });
      add(out, prefix + ".pi0." + pair_tag(i, j),
          special ? "object-space trivializer constraint holds"
                  : "generic object-space constraint has witnesses",
          [=, &cover, &restr] {
            return expect(restriction_vanishes(restr, cover.cond2_value(p, i, j), bodies));
          });
    }
  if (special || cover.options().paraequivalences > 0)
    for (size_t i = 0; i < n; ++i) {
      add(out, prefix + ".Omega." + std::to_string(i),
          special ? "special paracocycle has vanishing shifted base data"
                  : "generic shifted base data have witnesses",
          [=, &store] { return expect(check_zero(store, p.Omega_bar[i], bodies)); });
      if (q)
        add(out, prefix + ".J." + std::to_string(i),
            special ? "special paraequivalence has vanishing base shift"
                    : "generic base shift has witnesses",
            [=, &store] { return expect(check_zero(store, q->Jbar[i], bodies)); });
    }
  return out;
}

}  // namespace hgt
