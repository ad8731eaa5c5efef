#include "hgt/dga.hpp"

#include <sstream>

namespace hgt {

std::string DerivSet::label(size_t ord) const {
  if (ord == 0) return "d";
  std::ostringstream os;
  if (is_j(ord))
    os << "j";
  else
    os << "l";
  size_t base = is_j(ord) ? 1 : 1 + dim_g + kSlots * dim_e;
  size_t rel = ord - base;
  if (rel < dim_g) {
    os << "[x" << rel + 1 << "]";
  } else {
    rel -= dim_g;
    os << "[X" << (rel % dim_e) + 1 << (rel / dim_e ? "'" : "") << "]";
  }
  return os.str();
}

FieldStore::FieldStore(const CrossedModule& cm, int truncation)
    : cm_(&cm), table_(std::make_shared<GeneratorTable>(truncation)) {
  ds_.dim_g = cm.g.dim;
  ds_.dim_e = cm.e.dim;
  for (size_t s = 0; s < DerivSet::kSlots && cm.e.dim > 0; ++s)
    markers_.push_back(add_symbol("Xi" + std::to_string(s + 1), 1));
}

SymId FieldStore::add_symbol(const std::string& name, int degree) {
  SymId id = table_->add(name, degree);
  images_.resize(id + 1, std::vector<GradedScalar>());
  images_[id].assign(ds_.count(), GradedScalar(table_));
  return id;
}

LieValuedForm FieldStore::register_lie_field(const std::string& name, Target t, int degree) {
  LieValuedForm f = lv_zero(*cm_, t, degree, table_);
  for (size_t k = 0; k < f.coeff.size(); ++k)
    f.coeff[k] = GradedScalar::generator(table_, add_symbol(name + "_" + std::to_string(k + 1), degree));
  return f;
}

std::vector<SymId> FieldStore::register_scalars(const std::string& name, int degree, size_t n) {
  std::vector<SymId> out;
  for (size_t i = 0; i < n; ++i) out.push_back(add_symbol(name + std::to_string(i + 1), degree));
  return out;
}

size_t FieldStore::register_group_field(const std::string& name, Target t) {
  const LieAlgebraSpec& alg = cm_->alg(t);
  const GroupModel& gm = cm_->model(t);
  GroupField f;
  f.name = name;
  f.of = t;
  if (gm.model == BodyModel::NilpotentExp) {
    f.coord_mode = true;
    SMat b(table_, alg.rep_dim, alg.rep_dim);
    for (size_t k = 0; k < alg.dim; ++k) {
      SymId s = add_symbol(name + "_" + std::to_string(k + 1), 0);
      f.coords.push_back(s);
      b = b + SMat::from_rat(table_, alg.rep[k]) * GradedScalar::generator(table_, s);
    }
    f.elt = GroupElt(t, exp_series(b), exp_series(-b));
  } else {
    f.coord_mode = false;
    SMat m = SMat::identity(table_, alg.rep_dim), minv = SMat::identity(table_, alg.rep_dim);
    for (auto [r, c] : gm.free_entries) {
      SymId s = add_symbol(name + "_" + std::to_string(r) + std::to_string(c), 0);
      SymId si = add_symbol(name + "inv_" + std::to_string(r) + std::to_string(c), 0);
      m(r, c) = GradedScalar::generator(table_, s);
      minv(r, c) = GradedScalar::generator(table_, si);
      f.entry_syms.push_back({s, {r, c}});
      f.inv_entry_syms.push_back({si, {r, c}});
    }
    f.elt = GroupElt(t, m, minv);
  }
  groups_.push_back(std::move(f));
  return groups_.size() - 1;
}

void FieldStore::set_image(SymId sym, size_t ord, GradedScalar img) {
  if (!img.is_zero() && !img.is_homogeneous_of(table_->degree(sym) + ds_.op_degree(ord)))
    throw error("image degree mismatch for " + table_->name(sym) + " under " + ds_.label(ord));
  images_.at(sym).at(ord) = std::move(img);
}

void FieldStore::set_form_image(const LieValuedForm& field_value, size_t ord, const LieValuedForm& img) {
  if (field_value.coeff.size() != img.coeff.size()) throw error("set_form_image arity mismatch");
  for (size_t k = 0; k < field_value.coeff.size(); ++k) {
    const auto& terms = field_value.coeff[k].terms();
    if (terms.size() != 1 || terms[0].second != 1 || terms[0].first.even.size() + terms[0].first.odd.size() != 1)
      throw error("set_form_image expects a freshly registered field");
    SymId s = terms[0].first.odd.empty() ? terms[0].first.even[0] : terms[0].first.odd[0];
    set_image(s, ord, img.coeff[k]);
  }
}

namespace {

/// Coefficients of u/(e^u - 1) = sum_n (B_n / n!) u^n, exactly.
std::vector<Rational> bernoulli_series(size_t order) {
  std::vector<Rational> bern(order + 1);
  bern[0] = 1;
  for (size_t n = 1; n <= order; ++n) {
    // sum_{k=0}^{n} C(n+1,k) B_k = 0
    Rational acc = 0;
    Integer binom = 1;  // C(n+1, 0)
    for (size_t k = 0; k < n; ++k) {
      acc += Rational(binom) * bern[k];
      binom = binom * Integer(n + 1 - k) / Integer(k + 1);
    }
    bern[n] = -acc / Rational(binom);
  }
  std::vector<Rational> out(order + 1);
  Integer fact = 1;
  for (size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= static_cast<unsigned>(n);
    out[n] = bern[n] / Rational(fact);
  }
  return out;
}

/// Solves D(exp B) exp(-B) = rhat for D(B): D(B) = u/(e^u - 1) |_{u = ad_B} (rhat).
SMat solve_dexp(const SMat& b, const SMat& rhat, size_t max_steps = 24) {
  static const std::vector<Rational> coeff = bernoulli_series(24);
  SMat term = rhat;
  SMat acc = rhat;  // c_0 = 1
  for (size_t n = 1; n <= max_steps; ++n) {
    term = b * term - term * b;
    if (term.is_zero()) return acc;
    if (coeff[n] != 0) acc = acc + term * coeff[n];
  }
  throw error("inverse exp-differential series did not terminate");
}

}  // namespace

void FieldStore::set_group_mc(size_t group_idx, size_t ord, const LieValuedForm& mc, bool right_oriented) {
  GroupField& f = groups_.at(group_idx);
  SMat hat = form_hat(*cm_, mc);
  if (f.coord_mode) {
    const LieAlgebraSpec& alg = cm_->alg(f.of);
    // convert a left-invariant prescription to the right-invariant one
    SMat rhat = right_oriented ? hat : f.elt.m * hat * f.elt.minv;
    SMat b(table_, alg.rep_dim, alg.rep_dim);
    for (size_t k = 0; k < alg.dim; ++k)
      b = b + SMat::from_rat(table_, alg.rep[k]) * GradedScalar::generator(table_, f.coords[k]);
    SMat db = solve_dexp(b, rhat);
    std::vector<GradedScalar> dcoords = extract_coords(alg.extraction, alg.rep, db);
    for (size_t k = 0; k < alg.dim; ++k) set_image(f.coords[k], ord, dcoords[k]);
    return;
  }
  SMat dm = right_oriented ? hat * f.elt.m : f.elt.m * hat;
  // D(P^-1) = -P^-1 D(P) P^-1, written directly in terms of the inverse entries
  SMat dminv = right_oriented ? -(f.elt.minv * hat) : -(hat * f.elt.minv);
  std::set<std::pair<size_t, size_t>> free_set;
  for (const auto& [s, rc] : f.entry_syms) {
    free_set.insert(rc);
    set_image(s, ord, dm(rc.first, rc.second));
  }
  for (const auto& [s, rc] : f.inv_entry_syms) set_image(s, ord, dminv(rc.first, rc.second));
  // fixed entries must have identically vanishing derivatives
  for (size_t r = 0; r < dm.rows(); ++r)
    for (size_t c = 0; c < dm.cols(); ++c)
      if (!free_set.count({r, c}) && (!dm(r, c).is_zero() || !dminv(r, c).is_zero()))
        throw error("group pattern of " + f.name + " is not closed under the prescribed derivative");
}

void FieldStore::mark_base(const LieValuedForm& f) {
  for (const auto& c : f.coeff)
    for (const auto& [m, coeff] : c.terms()) {
      for (SymId s : m.odd) base_.insert(s);
      for (SymId s : m.even) base_.insert(s);
    }
}

void FieldStore::mark_base_group(size_t idx) {
  for (SymId s : groups_.at(idx).coords) base_.insert(s);
  for (const auto& [s, rc] : groups_.at(idx).entry_syms) base_.insert(s);
  for (const auto& [s, rc] : groups_.at(idx).inv_entry_syms) base_.insert(s);
}

GradedScalar FieldStore::apply(size_t ord, const GradedScalar& v) const {
  return v.derive([this, ord](SymId s) { return &images_.at(s).at(ord); }, ds_.op_degree(ord));
}

LieValuedForm FieldStore::apply(size_t ord, const LieValuedForm& v) const {
  LieValuedForm out = v;
  out.degree = v.degree + ds_.op_degree(ord);
  for (auto& c : out.coeff) c = apply(ord, c);
  return out;
}

SMat FieldStore::apply(size_t ord, const SMat& v) const {
  return v.derive([this, ord](SymId s) { return &images_.at(s).at(ord); }, ds_.op_degree(ord));
}

LieValuedForm FieldStore::right_mc(size_t ord, const GroupElt& p) const {
  SMat dm = apply(ord, p.m) * p.minv;
  return form_from_hat(*cm_, p.of, ds_.op_degree(ord), dm);
}

LieValuedForm FieldStore::x_value(size_t a, size_t slot) const {
  LieValuedForm f = lv_zero(*cm_, Target::E, 1, table_);
  f.coeff[a] = GradedScalar::generator(table_, markers_.at(slot));
  return f;
}

LieValuedForm FieldStore::x_basis(size_t i) const {
  LieValuedForm f = lv_zero(*cm_, Target::G, 0, table_);
  f.coeff[i] = GradedScalar::constant(table_, 1);
  return f;
}

const GradedScalar& FieldStore::image(SymId sym, size_t ord) const { return images_.at(sym).at(ord); }

std::map<SymId, Rational> FieldStore::sample_bodies(Rng& rng) const {
  std::map<SymId, Rational> out;
  for (const auto& f : groups_) {
    if (f.coord_mode) {
      for (SymId s : f.coords) out[s] = sample_rational(rng);
      continue;
    }
    auto [b, binv] = sample_body(*cm_, f.of, rng);
    for (const auto& [s, rc] : f.entry_syms) out[s] = b(rc.first, rc.second);
    for (const auto& [s, rc] : f.inv_entry_syms) out[s] = binv(rc.first, rc.second);
  }
  return out;
}

GradedScalar FieldStore::at_bodies(const GradedScalar& v, const std::map<SymId, Rational>& bodies) const {
  if (bodies.empty()) return v;
  std::vector<GradedScalar> cache;
  return v.substitute([&](SymId s) -> const GradedScalar* {
    auto it = bodies.find(s);
    if (it == bodies.end()) return nullptr;
    cache.push_back(GradedScalar::constant(table_, it->second));
    return &cache.back();
  });
}

bool FieldStore::base_supported(const GradedScalar& v) const {
  return v.supported_on([this](SymId s) { return is_base(s); });
}

bool FieldStore::base_supported(const LieValuedForm& v) const {
  for (const auto& c : v.coeff)
    if (!base_supported(c)) return false;
  return true;
}

GradedScalar FieldStore::strip_killed(const GradedScalar& v) const {
  if (killed_.empty()) return v;
  GradedScalar zero(table_);
  return v.substitute([&](SymId s) -> const GradedScalar* {
    return killed_.count(s) ? &zero : nullptr;
  });
}

LieValuedForm FieldStore::strip_killed(const LieValuedForm& v) const {
  LieValuedForm out = v;
  for (auto& c : out.coeff) c = strip_killed(c);
  return out;
}

FieldStore FieldStore::restricted(const std::vector<SymId>& kill) const {
  FieldStore out = *this;
  for (SymId s : kill) out.killed_.insert(s);
  out.x_derivs_alive_ = false;
  // closure: killed symbols must have killed images under surviving derivations
  std::vector<size_t> kept;
  kept.push_back(ds_.d());
  for (size_t i = 0; i < ds_.dim_g; ++i) {
    kept.push_back(ds_.jx(i));
    kept.push_back(ds_.lx(i));
  }
  for (SymId s : out.killed_)
    for (size_t ord : kept)
      if (!out.strip_killed(images_.at(s).at(ord)).is_zero())
        throw error("kill set not closed under derivation images (symbol " + table_->name(s) + ")");
  for (SymId s = 0; s < out.images_.size(); ++s) {
    if (out.killed_.count(s)) continue;
    for (size_t ord : kept) out.images_[s][ord] = out.strip_killed(out.images_[s][ord]);
  }
  return out;
}

// --- adapted coordinates -------------------------------------------------------

AdaptedCoordinates register_adapted(FieldStore& store, const std::string& prefix, size_t base_dim) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  AdaptedCoordinates co;

  if (base_dim > 0) {
    co.u = store.register_scalars(prefix + "u", 0, base_dim);
    co.v = store.register_scalars(prefix + "v", 1, base_dim);
    for (size_t i = 0; i < base_dim; ++i) {
      store.set_image(co.u[i], ds.d(), GradedScalar::generator(store.table(), co.v[i]));
      store.mark_base(co.u[i]);
      store.mark_base(co.v[i]);
    }
  }

  co.sigma = store.register_lie_field(prefix + "sg", Target::G, 1);
  co.Sigma = store.register_lie_field(prefix + "SG", Target::E, 2);
  co.Gamma = store.register_lie_field(prefix + "Gm", Target::E, 1);
  co.gamma = store.register_group_field(prefix + "gam", Target::G);
  const GroupElt gamma = store.group(co.gamma).elt;

  // differential images: the structure equations
  store.set_form_image(co.sigma, ds.d(),
                       bracket(cm, co.sigma, co.sigma) * Rational(-1, 2) + taudot(cm, co.Sigma));
  store.set_form_image(co.Sigma, ds.d(), -mudot2(cm, co.sigma, co.Sigma));
  store.set_form_image(co.Gamma, ds.d(),
                       act_e(cm, gamma, co.Sigma) - bracket(cm, co.Gamma, co.Gamma) * Rational(1, 2));
  store.set_group_mc(co.gamma, ds.d(),
                     co.sigma - taudot(cm, act_e(cm, gamma.inverse(), co.Gamma)), /*right=*/false);

  // contraction and Lie derivative images
  for (size_t i = 0; i < cm.g.dim; ++i) {
    store.set_form_image(co.sigma, ds.jx(i), store.x_basis(i));
    store.set_form_image(co.sigma, ds.lx(i), -bracket(cm, store.x_basis(i), co.sigma));
    store.set_form_image(co.Sigma, ds.lx(i), -mudot2(cm, store.x_basis(i), co.Sigma));
    store.set_group_mc(co.gamma, ds.lx(i), store.x_basis(i), /*right=*/false);
    // j images of Sigma, Gamma and gamma vanish for x-type indices
  }
  for (size_t a = 0; a < cm.e.dim; ++a)
    for (size_t s = 0; s < DerivSet::kSlots; ++s) {
      LieValuedForm X = store.x_value(a, s);
      store.set_form_image(co.sigma, ds.lX(a, s), taudot(cm, X));
      store.set_form_image(co.Sigma, ds.jX(a, s), X);
      store.set_form_image(co.Sigma, ds.lX(a, s), mudot2(cm, co.sigma, X));
      store.set_form_image(co.Gamma, ds.lX(a, s), act_e(cm, gamma, X));
    }
  return co;
}

// --- identity checks ------------------------------------------------------------

namespace {

std::string first_monomial(const GradedScalar& v) {
  if (v.is_zero()) return "";
  return v.terms().front().first.str(*v.table());
}

}  // namespace

std::string check_equal(const FieldStore& store, const GradedScalar& lhs, const GradedScalar& rhs,
                        const std::vector<std::map<SymId, Rational>>& bodies) {
  GradedScalar diff = lhs - rhs;
  if (diff.is_zero()) return "";
  if (bodies.empty()) return "residue " + first_monomial(diff);
  for (const auto& b : bodies) {
    GradedScalar at = store.at_bodies(diff, b);
    if (!at.is_zero()) return "residue " + first_monomial(at);
  }
  return "";
}

std::string check_equal(const FieldStore& store, const LieValuedForm& lhs, const LieValuedForm& rhs,
                        const std::vector<std::map<SymId, Rational>>& bodies) {
  if (lhs.coeff.size() != rhs.coeff.size()) return "component count mismatch";
  for (size_t k = 0; k < lhs.coeff.size(); ++k) {
    std::string w = check_equal(store, lhs.coeff[k], rhs.coeff[k], bodies);
    if (!w.empty()) return "component " + std::to_string(k + 1) + ": " + w;
  }
  return "";
}

std::string check_zero(const FieldStore& store, const LieValuedForm& v,
                       const std::vector<std::map<SymId, Rational>>& bodies) {
  for (size_t k = 0; k < v.coeff.size(); ++k) {
    std::string w = check_equal(store, v.coeff[k], GradedScalar(store.table()), bodies);
    if (!w.empty()) return "component " + std::to_string(k + 1) + ": " + w;
  }
  return "";
}

std::string check_zero(const FieldStore& store, const SMat& v,
                       const std::vector<std::map<SymId, Rational>>& bodies) {
  for (size_t r = 0; r < v.rows(); ++r)
    for (size_t c = 0; c < v.cols(); ++c) {
      std::string w = check_equal(store, v(r, c), GradedScalar(store.table()), bodies);
      if (!w.empty()) return "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + w;
    }
  return "";
}

std::string check_basic(const FieldStore& store, const LieValuedForm& v,
                        const std::vector<std::map<SymId, Rational>>& bodies) {
  const DerivSet& ds = store.derivs();
  std::vector<size_t> ords;
  for (size_t i = 0; i < ds.dim_g; ++i) {
    ords.push_back(ds.jx(i));
    ords.push_back(ds.lx(i));
  }
  if (store.x_derivs_alive())
    for (size_t a = 0; a < ds.dim_e; ++a) {
      ords.push_back(ds.jX(a, 0));
      ords.push_back(ds.lX(a, 0));
    }
  for (size_t ord : ords) {
    std::string w = check_zero(store, store.apply(ord, v), bodies);
    if (!w.empty()) return ds.label(ord) + ": " + w;
  }
  return "";
}

std::string check_basic_group(const FieldStore& store, const GroupElt& p,
                              const std::vector<std::map<SymId, Rational>>& bodies) {
  const DerivSet& ds = store.derivs();
  std::vector<size_t> ords;
  for (size_t i = 0; i < ds.dim_g; ++i) {
    ords.push_back(ds.jx(i));
    ords.push_back(ds.lx(i));
  }
  if (store.x_derivs_alive())
    for (size_t a = 0; a < ds.dim_e; ++a) {
      ords.push_back(ds.jX(a, 0));
      ords.push_back(ds.lX(a, 0));
    }
  for (size_t ord : ords) {
    std::string w = check_zero(store, store.apply(ord, p.m), bodies);
    if (!w.empty()) return ds.label(ord) + ": " + w;
  }
  return "";
}

namespace {

/// Image of a symbol under the derivation indexed by [Z,W] (j or l kind).
GradedScalar bracket_image(const FieldStore& store, bool j_kind, const ZIndex& z, const ZIndex& w, SymId s) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  GradedScalar out(store.table());
  auto ord_of = [&](bool x_type, size_t idx, size_t slot) {
    if (j_kind) return x_type ? ds.jx(idx) : ds.jX(idx, slot);
    return x_type ? ds.lx(idx) : ds.lX(idx, slot);
  };
  if (z.x_type && w.x_type) {
    for (size_t k = 0; k < cm.g.dim; ++k) {
      const Rational& c = cm.g.c[z.index][w.index][k];
      if (c != 0) out += store.image(s, ord_of(true, k, 0)) * c;
    }
  } else if (z.x_type && !w.x_type) {
    for (size_t c = 0; c < cm.e.dim; ++c) {
      const Rational& m = cm.mudot2_mats[z.index](c, w.index);
      if (m != 0) out += store.image(s, ord_of(false, c, w.slot)) * m;
    }
  } else if (!z.x_type && w.x_type) {
    for (size_t c = 0; c < cm.e.dim; ++c) {
      const Rational& m = cm.mudot2_mats[w.index](c, z.index);
      if (m != 0) out -= store.image(s, ord_of(false, c, z.slot)) * m;
    }
  }
  return out;
}

size_t ord_j(const DerivSet& ds, const ZIndex& z) { return z.x_type ? ds.jx(z.index) : ds.jX(z.index, z.slot); }
size_t ord_l(const DerivSet& ds, const ZIndex& z) { return z.x_type ? ds.lx(z.index) : ds.lX(z.index, z.slot); }

std::string z_label(const ZIndex& z) {
  return (z.x_type ? "x" : "X") + std::to_string(z.index + 1) + (z.slot ? "'" : "");
}

}  // namespace

std::vector<Check> cartan_checks(const FieldStore& store,
                                 const std::vector<std::map<SymId, Rational>>& bodies,
                                 const std::string& id_prefix) {
  const DerivSet& ds = store.derivs();
  std::vector<ZIndex> z1, z2;
  for (size_t i = 0; i < ds.dim_g; ++i) {
    z1.push_back({true, i, 0});
    z2.push_back({true, i, 0});
  }
  if (store.x_derivs_alive())
    for (size_t a = 0; a < ds.dim_e; ++a) {
      z1.push_back({false, a, 0});
      z2.push_back({false, a, 1});
    }

  std::vector<SymId> syms;
  for (SymId s = 0; s < store.symbol_count(); ++s)
    if (!store.symbol_killed(s)) syms.push_back(s);

  std::vector<Check> checks;
  auto add = [&](const std::string& id, const std::string& name, std::function<std::string()> fn) {
    checks.push_back({id_prefix + "." + id, name, std::move(fn)});
  };

  add("dd", "[d,d] = 0 on every generator", [&store, syms, bodies]() -> std::string {
    for (SymId s : syms) {
      GradedScalar v = store.apply(0, store.apply(0, GradedScalar::generator(store.table(), s)));
      std::string w = check_equal(store, v, GradedScalar(store.table()), bodies);
      if (!w.empty()) return store.table()->name(s) + ": " + w;
    }
    return "";
  });

  for (const ZIndex& z : z1) {
    add("dj." + z_label(z), "[d,j_Z] = l_Z for Z = " + z_label(z), [&store, z, syms, bodies]() -> std::string {
      const DerivSet& dsl = store.derivs();
      for (SymId s : syms) {
        GradedScalar gen = GradedScalar::generator(store.table(), s);
        GradedScalar lhs = store.apply(dsl.d(), store.apply(ord_j(dsl, z), gen)) +
                           store.apply(ord_j(dsl, z), store.apply(dsl.d(), gen));
        GradedScalar rhs = store.image(s, ord_l(dsl, z));
        std::string w = check_equal(store, lhs, rhs, bodies);
        if (!w.empty()) return store.table()->name(s) + ": " + w;
      }
      return "";
    });
    add("dl." + z_label(z), "[d,l_Z] = 0 for Z = " + z_label(z), [&store, z, syms, bodies]() -> std::string {
      const DerivSet& dsl = store.derivs();
      for (SymId s : syms) {
        GradedScalar gen = GradedScalar::generator(store.table(), s);
        GradedScalar lhs = store.apply(dsl.d(), store.apply(ord_l(dsl, z), gen)) -
                           store.apply(ord_l(dsl, z), store.apply(dsl.d(), gen));
        std::string w = check_equal(store, lhs, GradedScalar(store.table()), bodies);
        if (!w.empty()) return store.table()->name(s) + ": " + w;
      }
      return "";
    });
  }

  for (const ZIndex& z : z1)
    for (const ZIndex& w : z2) {
      std::string pair = z_label(z) + "," + z_label(w);
      add("jj." + pair, "[j_Z,j_W] = 0 for Z,W = " + pair, [&store, z, w, syms, bodies]() -> std::string {
        const DerivSet& dsl = store.derivs();
        for (SymId s : syms) {
          GradedScalar gen = GradedScalar::generator(store.table(), s);
          GradedScalar lhs = store.apply(ord_j(dsl, z), store.apply(ord_j(dsl, w), gen)) +
                             store.apply(ord_j(dsl, w), store.apply(ord_j(dsl, z), gen));
          std::string wt = check_equal(store, lhs, GradedScalar(store.table()), bodies);
          if (!wt.empty()) return store.table()->name(s) + ": " + wt;
        }
        return "";
      });
      add("lj." + pair, "[l_Z,j_W] = j_[Z,W] for Z,W = " + pair, [&store, z, w, syms, bodies]() -> std::string {
        const DerivSet& dsl = store.derivs();
        for (SymId s : syms) {
          GradedScalar gen = GradedScalar::generator(store.table(), s);
          GradedScalar lhs = store.apply(ord_l(dsl, z), store.apply(ord_j(dsl, w), gen)) -
                             store.apply(ord_j(dsl, w), store.apply(ord_l(dsl, z), gen));
          GradedScalar rhs = bracket_image(store, true, z, w, s);
          std::string wt = check_equal(store, lhs, rhs, bodies);
          if (!wt.empty()) return store.table()->name(s) + ": " + wt;
        }
        return "";
      });
      add("ll." + pair, "[l_Z,l_W] = l_[Z,W] for Z,W = " + pair, [&store, z, w, syms, bodies]() -> std::string {
        const DerivSet& dsl = store.derivs();
        for (SymId s : syms) {
          GradedScalar gen = GradedScalar::generator(store.table(), s);
          GradedScalar lhs = store.apply(ord_l(dsl, z), store.apply(ord_l(dsl, w), gen)) -
                             store.apply(ord_l(dsl, w), store.apply(ord_l(dsl, z), gen));
          GradedScalar rhs = bracket_image(store, false, z, w, s);
          std::string wt = check_equal(store, lhs, rhs, bodies);
          if (!wt.empty()) return store.table()->name(s) + ": " + wt;
        }
        return "";
      });
    }
  return checks;
}

}  // namespace hgt
