#include "hgt/gauge.hpp"

namespace hgt {

namespace {

/// Basis of ker(taudot) as coordinate vectors in e.
std::vector<std::vector<Rational>> taudot_kernel(const CrossedModule& cm) {
  size_t rows = cm.g.dim, cols = cm.e.dim;
  RatMat a(rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) a(r, c) = cm.taudot(r, c);
  // Gauss elimination to find the null space
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(rank, j));
    Rational d = a(rank, c);
    for (size_t j = 0; j < cols; ++j) a(rank, j) /= d;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Rational f = a(r, c);
      if (f == 0) continue;
      for (size_t j = 0; j < cols; ++j) a(r, j) -= f * a(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> kernel;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a(r, free);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

TwoConnection make_connection(FieldStore& store, const std::string& prefix, ConnectionKind kind) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  TwoConnection a;
  a.omega = store.register_lie_field(prefix + "om", Target::G, 1);
  a.Omega = store.register_lie_field(prefix + "Om", Target::E, 2);

  if (kind == ConnectionKind::Generic) {
    a.theta = store.register_lie_field(prefix + "th", Target::G, 2);
    a.Theta = store.register_lie_field(prefix + "Th", Target::E, 3);
  } else {
    a.theta = lv_zero(cm, Target::G, 2, store.table());
    a.Theta = lv_zero(cm, Target::E, 3, store.table());
    if (kind == ConnectionKind::FakeFlat) {
      auto kernel = taudot_kernel(cm);
      if (!kernel.empty()) {
        std::vector<SymId> ksyms = store.register_scalars(prefix + "Thk", 3, kernel.size());
        for (size_t j = 0; j < kernel.size(); ++j)
          for (size_t e = 0; e < cm.e.dim; ++e)
            if (kernel[j][e] != 0)
              a.Theta.coeff[e] += GradedScalar::generator(store.table(), ksyms[j]) * kernel[j][e];
        // images of the kernel coordinates are fixed by the curvature relation
        // d Theta = -mudot2(omega, Theta) (theta vanishes): solve in the kernel basis.
        // Build extraction for the kernel vectors.
        std::vector<RatMat> kmats;
        for (const auto& v : kernel) {
          RatMat m(cm.e.dim, 1);
          for (size_t e = 0; e < cm.e.dim; ++e) m(e, 0) = v[e];
          kmats.push_back(m);
        }
        RatMat extraction = extraction_matrix(kmats);
        auto solve_in_kernel = [&](const LieValuedForm& rhs) {
          SMat col(store.table(), cm.e.dim, 1);
          for (size_t e = 0; e < cm.e.dim; ++e) col(e, 0) = rhs.coeff[e];
          return extract_coords(extraction, kmats, col);
        };
        LieValuedForm dTheta = -mudot2(cm, a.omega, a.Theta);
        std::vector<GradedScalar> dcoords = solve_in_kernel(dTheta);
        for (size_t j = 0; j < kernel.size(); ++j) store.set_image(ksyms[j], ds.d(), dcoords[j]);
        for (size_t i = 0; i < cm.g.dim; ++i) {
          std::vector<GradedScalar> lc = solve_in_kernel(-mudot2(cm, store.x_basis(i), a.Theta));
          for (size_t j = 0; j < kernel.size(); ++j) store.set_image(ksyms[j], ds.lx(i), lc[j]);
        }
        // j images and X-type Lie derivatives of Theta vanish when theta = 0
      }
    }
  }

  store.set_form_image(a.omega, ds.d(),
                       bracket(cm, a.omega, a.omega) * Rational(-1, 2) + taudot(cm, a.Omega) + a.theta);
  store.set_form_image(a.Omega, ds.d(), -mudot2(cm, a.omega, a.Omega) + a.Theta);
  if (kind == ConnectionKind::Generic) {
    store.set_form_image(a.theta, ds.d(), -bracket(cm, a.omega, a.theta) - taudot(cm, a.Theta));
    store.set_form_image(a.Theta, ds.d(),
                         -mudot2(cm, a.omega, a.Theta) + mudot2(cm, a.theta, a.Omega));
  }
  for (size_t i = 0; i < cm.g.dim; ++i) {
    LieValuedForm x = store.x_basis(i);
    store.set_form_image(a.omega, ds.jx(i), x);
    store.set_form_image(a.omega, ds.lx(i), -bracket(cm, x, a.omega));
    store.set_form_image(a.Omega, ds.lx(i), -mudot2(cm, x, a.Omega));
    if (kind == ConnectionKind::Generic) {
      store.set_form_image(a.theta, ds.lx(i), -bracket(cm, x, a.theta));
      store.set_form_image(a.Theta, ds.lx(i), -mudot2(cm, x, a.Theta));
    }
  }
  for (size_t e = 0; e < cm.e.dim; ++e)
    for (size_t s = 0; s < DerivSet::kSlots; ++s) {
      LieValuedForm X = store.x_value(e, s);
      store.set_form_image(a.omega, ds.lX(e, s), taudot(cm, X));
      store.set_form_image(a.Omega, ds.jX(e, s), X);
      store.set_form_image(a.Omega, ds.lX(e, s), mudot2(cm, a.omega, X));
      if (kind == ConnectionKind::Generic)
        store.set_form_image(a.Theta, ds.lX(e, s), mudot2(cm, a.theta, X));
    }
  return a;
}

OneGauge make_one_gauge(FieldStore& store, const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  OneGauge psi;
  size_t gidx = store.register_group_field(prefix + "g", Target::G);
  psi.g = store.group(gidx).elt;
  psi.J = store.register_lie_field(prefix + "J", Target::E, 1);
  psi.h = store.register_lie_field(prefix + "h", Target::G, 1);
  psi.K = store.register_lie_field(prefix + "K", Target::E, 2);

  store.set_group_mc(gidx, ds.d(), -psi.h - taudot(cm, psi.J), /*right=*/true);
  store.set_form_image(psi.J, ds.d(),
                       -psi.K - bracket(cm, psi.J, psi.J) * Rational(1, 2) - mudot2(cm, psi.h, psi.J));
  store.set_form_image(psi.h, ds.d(),
                       bracket(cm, psi.h, psi.h) * Rational(-1, 2) + taudot(cm, psi.K));
  store.set_form_image(psi.K, ds.d(), -mudot2(cm, psi.h, psi.K));

  for (size_t i = 0; i < cm.g.dim; ++i) {
    LieValuedForm x = store.x_basis(i);
    LieValuedForm adx = ad_g(cm, psi.g, x);
    store.set_form_image(psi.h, ds.jx(i), x - adx);
    store.set_form_image(psi.K, ds.jx(i), mudot2(cm, adx, psi.J));
    store.set_group_mc(gidx, ds.lx(i), -x + adx, /*right=*/true);
    store.set_form_image(psi.J, ds.lx(i), -mudot2(cm, x, psi.J));
    store.set_form_image(psi.h, ds.lx(i), -bracket(cm, x, psi.h));
    store.set_form_image(psi.K, ds.lx(i), -mudot2(cm, x, psi.K));
  }
  for (size_t e = 0; e < cm.e.dim; ++e)
    for (size_t s = 0; s < DerivSet::kSlots; ++s) {
      LieValuedForm X = store.x_value(e, s);
      LieValuedForm gX = act_e(cm, psi.g, X);
      store.set_form_image(psi.K, ds.jX(e, s), X - gX);
      store.set_form_image(psi.J, ds.lX(e, s), -X + gX);
      store.set_form_image(psi.h, ds.lX(e, s), taudot(cm, X) - ad_g(cm, psi.g, taudot(cm, X)));
      store.set_form_image(psi.K, ds.lX(e, s), mudot2(cm, psi.h, X) + bracket(cm, gX, psi.J));
    }
  return psi;
}

OneGauge one_gauge_identity(FieldStore& store) {
  const CrossedModule& cm = store.cm();
  OneGauge psi;
  psi.g = GroupElt::identity(cm, Target::G, store.table());
  psi.J = lv_zero(cm, Target::E, 1, store.table());
  psi.h = lv_zero(cm, Target::G, 1, store.table());
  psi.K = lv_zero(cm, Target::E, 2, store.table());
  return psi;
}

OneGauge compose_one_gauge(const FieldStore& store, const OneGauge& outer, const OneGauge& inner) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  OneGauge out;
  out.g = outer.g * inner.g;
  out.J = outer.J + act_e(cm, outer.g, inner.J);
  // shift components recomputed from the defining relations
  SMat mc = store.apply(ds.d(), out.g.m) * out.g.minv;
  out.h = -form_from_hat(cm, Target::G, 1, mc) - taudot(cm, out.J);
  out.K = -store.apply(ds.d(), out.J) - bracket(cm, out.J, out.J) * Rational(1, 2) -
          mudot2(cm, out.h, out.J);
  return out;
}

OneGauge invert_one_gauge(const FieldStore& store, const OneGauge& psi) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  OneGauge out;
  out.g = psi.g.inverse();
  out.J = -act_e(cm, out.g, psi.J);
  SMat mc = store.apply(ds.d(), out.g.m) * out.g.minv;
  out.h = -form_from_hat(cm, Target::G, 1, mc) - taudot(cm, out.J);
  out.K = -store.apply(ds.d(), out.J) - bracket(cm, out.J, out.J) * Rational(1, 2) -
          mudot2(cm, out.h, out.J);
  return out;
}

TwoConnection act_one_gauge(const FieldStore& store, const OneGauge& psi, const TwoConnection& a) {
  const CrossedModule& cm = store.cm();
  TwoConnection out;
  LieValuedForm adom = ad_g(cm, psi.g, a.omega);
  LieValuedForm adth = ad_g(cm, psi.g, a.theta);
  out.omega = adom + psi.h;
  out.Omega = act_e(cm, psi.g, a.Omega) - mudot2(cm, adom, psi.J) + psi.K;
  out.theta = adth;
  out.Theta = act_e(cm, psi.g, a.Theta) - mudot2(cm, adth, psi.J);
  return out;
}

TwoGauge make_two_gauge(FieldStore& store, const std::string& prefix, const TwoConnection& ref, int ref_id) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  TwoGauge eps;
  eps.ref_id = ref_id;
  size_t eidx = store.register_group_field(prefix + "E", Target::E);
  eps.E = store.group(eidx).elt;
  eps.C = store.register_lie_field(prefix + "C", Target::E, 1);

  store.set_group_mc(eidx, ds.d(), -eps.C - coact(cm, ref.omega, eps.E), /*right=*/true);
  store.set_form_image(eps.C, ds.d(),
                       bracket(cm, eps.C, eps.C) * Rational(-1, 2) - mudot2(cm, ref.omega, eps.C) -
                           coact(cm, ref.theta, eps.E) - ref.Omega + ad_e(cm, eps.E, ref.Omega));
  for (size_t i = 0; i < cm.g.dim; ++i) {
    LieValuedForm x = store.x_basis(i);
    store.set_group_mc(eidx, ds.lx(i), -coact(cm, x, eps.E), /*right=*/true);
    store.set_form_image(eps.C, ds.lx(i), -mudot2(cm, x, eps.C));
  }
  for (size_t e = 0; e < cm.e.dim; ++e)
    for (size_t s = 0; s < DerivSet::kSlots; ++s) {
      LieValuedForm X = store.x_value(e, s);
      store.set_form_image(eps.C, ds.lX(e, s), -X + ad_e(cm, eps.E, X));
    }
  return eps;
}

TwoGauge two_gauge_identity(FieldStore& store, int ref_id) {
  const CrossedModule& cm = store.cm();
  TwoGauge eps;
  eps.ref_id = ref_id;
  eps.E = GroupElt::identity(cm, Target::E, store.table());
  eps.C = lv_zero(cm, Target::E, 1, store.table());
  return eps;
}

OneGauge act_two_gauge(const FieldStore& store, const TwoGauge& eps, const OneGauge& psi,
                       const TwoConnection& ref, int ref_id) {
  if (eps.ref_id != ref_id) throw error("two-gauge reference connection mismatch");
  const CrossedModule& cm = store.cm();
  GroupElt tauE = tau_group(cm, eps.E);
  LieValuedForm adom = ad_g(cm, psi.g, ref.omega);
  LieValuedForm adth = ad_g(cm, psi.g, ref.theta);
  LieValuedForm delta = coact(cm, ref.omega - adom - psi.h, eps.E) + eps.C;
  OneGauge out;
  out.g = tauE * psi.g;
  out.J = ad_e(cm, eps.E, psi.J) + delta;
  out.h = ad_g(cm, tauE, psi.h) + taudot(cm, coact(cm, adom + psi.h, eps.E));
  LieValuedForm gOmega = act_e(cm, psi.g, ref.Omega) - mudot2(cm, adom, psi.J) + psi.K;
  out.K = ad_e(cm, eps.E, psi.K) + mudot2(cm, ad_g(cm, tauE, adom), delta) +
          coact(cm, adth + taudot(cm, gOmega), eps.E);
  return out;
}

// --- audits ---------------------------------------------------------------------

namespace {

using Bodies = std::vector<std::map<SymId, Rational>>;

void add_check(std::vector<Check>& out, const std::string& id, const std::string& name,
               std::function<std::string()> fn) {
  out.push_back({id, name, std::move(fn)});
}

std::string mc_matches(const FieldStore& store, size_t ord, const GroupElt& p, const LieValuedForm& want,
                       const Bodies& bodies) {
  SMat lhs = store.apply(ord, p.m) * p.minv;
  return check_zero(store, lhs - form_hat(store.cm(), want), bodies);
}

}  // namespace

std::vector<Check> connection_checks(const FieldStore& store, const TwoConnection& a, const Bodies& bodies,
                                     const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  std::vector<Check> out;
  add_check(out, prefix + ".d_omega", "curvature relation for the connection component", [=, &store] {
    LieValuedForm want =
        bracket(cm, a.omega, a.omega) * Rational(-1, 2) + taudot(cm, a.Omega) + a.theta;
    return check_equal(store, store.apply(ds.d(), a.omega), want, bodies);
  });
  add_check(out, prefix + ".d_Omega", "curvature relation for the shifted component", [=, &store] {
    return check_equal(store, store.apply(ds.d(), a.Omega), -mudot2(cm, a.omega, a.Omega) + a.Theta,
                       bodies);
  });
  add_check(out, prefix + ".d_theta", "differential identity obeyed by the curvature", [=, &store] {
    return check_equal(store, store.apply(ds.d(), a.theta),
                       -bracket(cm, a.omega, a.theta) - taudot(cm, a.Theta), bodies);
  });
  add_check(out, prefix + ".d_Theta", "differential identity obeyed by the shifted curvature", [=, &store] {
    return check_equal(store, store.apply(ds.d(), a.Theta),
                       -mudot2(cm, a.omega, a.Theta) + mudot2(cm, a.theta, a.Omega), bodies);
  });
  add_check(out, prefix + ".j_x", "contractions along the unshifted basis", [=, &store] {
    for (size_t i = 0; i < cm.g.dim; ++i) {
      std::string w;
      w = check_equal(store, store.apply(ds.jx(i), a.omega), store.x_basis(i), bodies);
      if (w.empty()) w = check_zero(store, store.apply(ds.jx(i), a.Omega), bodies);
      if (w.empty()) w = check_zero(store, store.apply(ds.jx(i), a.theta), bodies);
      if (w.empty()) w = check_zero(store, store.apply(ds.jx(i), a.Theta), bodies);
      if (!w.empty()) return "x" + std::to_string(i + 1) + ": " + w;
    }
    return std::string();
  });
  add_check(out, prefix + ".l_x", "Lie derivatives along the unshifted basis", [=, &store] {
    for (size_t i = 0; i < cm.g.dim; ++i) {
      LieValuedForm x = store.x_basis(i);
      std::string w;
      w = check_equal(store, store.apply(ds.lx(i), a.omega), -bracket(cm, x, a.omega), bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.lx(i), a.Omega), -mudot2(cm, x, a.Omega), bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.lx(i), a.theta), -bracket(cm, x, a.theta), bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.lx(i), a.Theta), -mudot2(cm, x, a.Theta), bodies);
      if (!w.empty()) return "x" + std::to_string(i + 1) + ": " + w;
    }
    return std::string();
  });
  if (store.x_derivs_alive()) {
    add_check(out, prefix + ".j_X", "contractions along the shifted basis", [=, &store] {
      for (size_t e = 0; e < cm.e.dim; ++e) {
        LieValuedForm X = store.x_value(e, 0);
        std::string w;
        w = check_zero(store, store.apply(ds.jX(e, 0), a.omega), bodies);
        if (w.empty()) w = check_equal(store, store.apply(ds.jX(e, 0), a.Omega), X, bodies);
        if (w.empty()) w = check_zero(store, store.apply(ds.jX(e, 0), a.theta), bodies);
        if (w.empty()) w = check_zero(store, store.apply(ds.jX(e, 0), a.Theta), bodies);
        if (!w.empty()) return "X" + std::to_string(e + 1) + ": " + w;
      }
      return std::string();
    });
    add_check(out, prefix + ".l_X", "Lie derivatives along the shifted basis", [=, &store] {
      for (size_t e = 0; e < cm.e.dim; ++e) {
        LieValuedForm X = store.x_value(e, 0);
        std::string w;
        w = check_equal(store, store.apply(ds.lX(e, 0), a.omega), taudot(cm, X), bodies);
        if (w.empty())
          w = check_equal(store, store.apply(ds.lX(e, 0), a.Omega), mudot2(cm, a.omega, X), bodies);
        if (w.empty()) w = check_zero(store, store.apply(ds.lX(e, 0), a.theta), bodies);
        if (w.empty())
          w = check_equal(store, store.apply(ds.lX(e, 0), a.Theta), mudot2(cm, a.theta, X), bodies);
        if (!w.empty()) return "X" + std::to_string(e + 1) + ": " + w;
      }
      return std::string();
    });
  }
  return out;
}

std::vector<Check> one_gauge_checks(const FieldStore& store, const OneGauge& psi, const Bodies& bodies,
                                    const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  std::vector<Check> out;
  add_check(out, prefix + ".d", "differential relations of the transformation data", [=, &store] {
    std::string w = mc_matches(store, ds.d(), psi.g, -psi.h - taudot(cm, psi.J), bodies);
    if (w.empty())
      w = check_equal(store, store.apply(ds.d(), psi.J),
                      -psi.K - bracket(cm, psi.J, psi.J) * Rational(1, 2) - mudot2(cm, psi.h, psi.J),
                      bodies);
    if (w.empty())
      w = check_equal(store, store.apply(ds.d(), psi.h),
                      bracket(cm, psi.h, psi.h) * Rational(-1, 2) + taudot(cm, psi.K), bodies);
    if (w.empty())
      w = check_equal(store, store.apply(ds.d(), psi.K), -mudot2(cm, psi.h, psi.K), bodies);
    return w;
  });
  add_check(out, prefix + ".j_x", "contractions along the unshifted basis", [=, &store] {
    for (size_t i = 0; i < cm.g.dim; ++i) {
      LieValuedForm x = store.x_basis(i);
      LieValuedForm adx = ad_g(cm, psi.g, x);
      std::string w = check_zero(store, store.apply(ds.jx(i), psi.g.m), bodies);
      if (w.empty()) w = check_zero(store, store.apply(ds.jx(i), psi.J), bodies);
      if (w.empty()) w = check_equal(store, store.apply(ds.jx(i), psi.h), x - adx, bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.jx(i), psi.K), mudot2(cm, adx, psi.J), bodies);
      if (!w.empty()) return "x" + std::to_string(i + 1) + ": " + w;
    }
    return std::string();
  });
  add_check(out, prefix + ".l_x", "Lie derivatives along the unshifted basis", [=, &store] {
    for (size_t i = 0; i < cm.g.dim; ++i) {
      LieValuedForm x = store.x_basis(i);
      LieValuedForm adx = ad_g(cm, psi.g, x);
      std::string w = mc_matches(store, ds.lx(i), psi.g, -x + adx, bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.lx(i), psi.J), -mudot2(cm, x, psi.J), bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.lx(i), psi.h), -bracket(cm, x, psi.h), bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.lx(i), psi.K), -mudot2(cm, x, psi.K), bodies);
      if (!w.empty()) return "x" + std::to_string(i + 1) + ": " + w;
    }
    return std::string();
  });
  if (store.x_derivs_alive()) {
    add_check(out, prefix + ".j_X", "contractions along the shifted basis", [=, &store] {
      for (size_t e = 0; e < cm.e.dim; ++e) {
        LieValuedForm X = store.x_value(e, 0);
        LieValuedForm gX = act_e(cm, psi.g, X);
        std::string w = check_zero(store, store.apply(ds.jX(e, 0), psi.g.m), bodies);
        if (w.empty()) w = check_zero(store, store.apply(ds.jX(e, 0), psi.J), bodies);
        if (w.empty()) w = check_zero(store, store.apply(ds.jX(e, 0), psi.h), bodies);
        if (w.empty()) w = check_equal(store, store.apply(ds.jX(e, 0), psi.K), X - gX, bodies);
        if (!w.empty()) return "X" + std::to_string(e + 1) + ": " + w;
      }
      return std::string();
    });
    add_check(out, prefix + ".l_X", "Lie derivatives along the shifted basis", [=, &store] {
      for (size_t e = 0; e < cm.e.dim; ++e) {
        LieValuedForm X = store.x_value(e, 0);
        LieValuedForm gX = act_e(cm, psi.g, X);
        std::string w = check_zero(store, store.apply(ds.lX(e, 0), psi.g.m), bodies);
        if (w.empty())
          w = check_equal(store, store.apply(ds.lX(e, 0), psi.J), -X + gX, bodies);
        if (w.empty())
          w = check_equal(store, store.apply(ds.lX(e, 0), psi.h),
                          taudot(cm, X) - ad_g(cm, psi.g, taudot(cm, X)), bodies);
        if (w.empty())
          w = check_equal(store, store.apply(ds.lX(e, 0), psi.K),
                          mudot2(cm, psi.h, X) + bracket(cm, gX, psi.J), bodies);
        if (!w.empty()) return "X" + std::to_string(e + 1) + ": " + w;
      }
      return std::string();
    });
  }
  return out;
}

std::vector<Check> two_gauge_checks(const FieldStore& store, const TwoGauge& eps, const TwoConnection& ref,
                                    const Bodies& bodies, const std::string& prefix) {
  const CrossedModule& cm = store.cm();
  const DerivSet& ds = store.derivs();
  std::vector<Check> out;
  add_check(out, prefix + ".d", "differential relations of the modification data", [=, &store] {
    std::string w = mc_matches(store, ds.d(), eps.E, -eps.C - coact(cm, ref.omega, eps.E), bodies);
    if (w.empty())
      w = check_equal(store, store.apply(ds.d(), eps.C),
                      bracket(cm, eps.C, eps.C) * Rational(-1, 2) - mudot2(cm, ref.omega, eps.C) -
                          coact(cm, ref.theta, eps.E) - ref.Omega + ad_e(cm, eps.E, ref.Omega),
                      bodies);
    return w;
  });
  add_check(out, prefix + ".j", "contractions annihilate the modification data", [=, &store] {
    for (size_t i = 0; i < cm.g.dim; ++i) {
      std::string w = check_zero(store, store.apply(ds.jx(i), eps.E.m), bodies);
      if (w.empty()) w = check_zero(store, store.apply(ds.jx(i), eps.C), bodies);
      if (!w.empty()) return "x" + std::to_string(i + 1) + ": " + w;
    }
    if (store.x_derivs_alive())
      for (size_t e = 0; e < cm.e.dim; ++e) {
        std::string w = check_zero(store, store.apply(ds.jX(e, 0), eps.E.m), bodies);
        if (w.empty()) w = check_zero(store, store.apply(ds.jX(e, 0), eps.C), bodies);
        if (!w.empty()) return "X" + std::to_string(e + 1) + ": " + w;
      }
    return std::string();
  });
  add_check(out, prefix + ".l", "Lie derivatives of the modification data", [=, &store] {
    for (size_t i = 0; i < cm.g.dim; ++i) {
      LieValuedForm x = store.x_basis(i);
      std::string w = mc_matches(store, ds.lx(i), eps.E, -coact(cm, x, eps.E), bodies);
      if (w.empty())
        w = check_equal(store, store.apply(ds.lx(i), eps.C), -mudot2(cm, x, eps.C), bodies);
      if (!w.empty()) return "x" + std::to_string(i + 1) + ": " + w;
    }
    if (store.x_derivs_alive())
      for (size_t e = 0; e < cm.e.dim; ++e) {
        LieValuedForm X = store.x_value(e, 0);
        std::string w = check_zero(store, store.apply(ds.lX(e, 0), eps.E.m), bodies);
        if (w.empty())
          w = check_equal(store, store.apply(ds.lX(e, 0), eps.C), -X + ad_e(cm, eps.E, X), bodies);
        if (!w.empty()) return "X" + std::to_string(e + 1) + ": " + w;
      }
    return std::string();
  });
  return out;
}

std::vector<SymId> form_symbols(const LieValuedForm& f) {
  std::vector<SymId> out;
  for (const auto& c : f.coeff)
    for (const auto& [m, coeff] : c.terms()) {
      for (SymId s : m.odd) out.push_back(s);
      for (SymId s : m.even) out.push_back(s);
    }
  return out;
}

std::string restriction_vanishes(const FieldStore& restricted, const LieValuedForm& v, const Bodies& bodies) {
  return check_zero(restricted, restricted.strip_killed(v), bodies);
}

}  // namespace hgt
