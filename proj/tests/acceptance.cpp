// Acceptance suite: every displayed identity of the implemented calculus is
// reproduced exactly in rational arithmetic (zero tolerance), across all four
// shipped crossed modules, plus ordinary-theory degeneration and seeded
// negative controls. One line per criterion.

#include <iostream>
#include <sstream>
#include <vector>

#include "hgt/cocycle.hpp"
#include "hgt/derived.hpp"
#include "hgt/scenario.hpp"

using namespace hgt;

namespace {

using Bodies = std::vector<std::map<SymId, Rational>>;

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::vector<std::string> failures;

  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  void absorb(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
      if (!r.pass) {
        pass = false;
        failures.push_back(r.id + ": " + r.witness);
      }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

Bodies bodies_for(const FieldStore& store, int n, uint64_t seed) {
  Rng rng(seed);
  Bodies out;
  for (int i = 0; i < n; ++i) out.push_back(store.sample_bodies(rng));
  return out;
}

const char* kCms[] = {"CM-T", "CM-C", "CM-A", "CM-H"};

// --- criterion 1: Cartan relations on adapted stores -----------------------------

Criterion criterion1() {
  Criterion c{1, "Cartan relations on adapted-coordinate stores (D=6, 3 bodies, all modules)"};
  for (const char* id : kCms) {
    FieldStore store(shipped_cm(id), 6);
    register_adapted(store, "", 2);
    c.absorb(run_checks(cartan_checks(store, bodies_for(store, 3, 101), std::string(id) + ".cartan")));
  }
  return c;
}

// --- criterion 2: connection stores and the curvature identities ------------------

Criterion criterion2() {
  Criterion c{2, "connection stores respect the operation; curvature identities exact"};
  for (const char* id : kCms) {
    FieldStore store(shipped_cm(id), 6);
    TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
    Bodies bodies = bodies_for(store, 3, 103);
    c.absorb(run_checks(cartan_checks(store, bodies, std::string(id) + ".cartan")));
    c.absorb(run_checks(connection_checks(store, a, bodies, std::string(id) + ".conn")));
    // the two differential consequence identities, re-derived from the values
    const CrossedModule& cm = store.cm();
    const DerivSet& ds = store.derivs();
    LieValuedForm lhs = store.apply(ds.d(), a.theta) + bracket(cm, a.omega, a.theta) +
                        taudot(cm, a.Theta);
    c.require(check_zero(store, lhs, bodies).empty(), std::string(id) + ": theta identity");
    LieValuedForm lhs2 = store.apply(ds.d(), a.Theta) + mudot2(cm, a.omega, a.Theta) -
                         mudot2(cm, a.theta, a.Omega);
    c.require(check_zero(store, lhs2, bodies).empty(), std::string(id) + ": Theta identity");
  }
  return c;
}

// --- criterion 3: 1-gauge stores, action audit, group laws -------------------------

Criterion criterion3() {
  Criterion c{3, "1-gauge stores, gauge action audit, left action and group laws, flatness"};
  for (const char* id : kCms) {
    const CrossedModule& cm = shipped_cm(id);
    FieldStore store(cm, 6);
    TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
    OneGauge p1 = make_one_gauge(store, "p1");
    OneGauge p2 = make_one_gauge(store, "p2");
    Bodies bodies = bodies_for(store, 3, 107);
    c.absorb(run_checks(cartan_checks(store, bodies, std::string(id) + ".cartan")));
    c.absorb(run_checks(one_gauge_checks(store, p1, bodies, std::string(id) + ".defining")));
    c.absorb(run_checks(
        connection_checks(store, act_one_gauge(store, p1, a), bodies, std::string(id) + ".acted")));

    TwoConnection lhs = act_one_gauge(store, p2, act_one_gauge(store, p1, a));
    TwoConnection rhs = act_one_gauge(store, compose_one_gauge(store, p2, p1), a);
    c.require(check_equal(store, lhs.omega, rhs.omega, bodies).empty() &&
                  check_equal(store, lhs.Omega, rhs.Omega, bodies).empty() &&
                  check_equal(store, lhs.theta, rhs.theta, bodies).empty() &&
                  check_equal(store, lhs.Theta, rhs.Theta, bodies).empty(),
              std::string(id) + ": left action law");

    OneGauge e = one_gauge_identity(store);
    OneGauge li = compose_one_gauge(store, p1, invert_one_gauge(store, p1));
    c.require(check_zero(store, li.g.m - e.g.m, bodies).empty() &&
                  check_equal(store, li.J, e.J, bodies).empty(),
              std::string(id) + ": inverse law");
    OneGauge al = compose_one_gauge(store, compose_one_gauge(store, p2, p1), p2);
    OneGauge ar = compose_one_gauge(store, p2, compose_one_gauge(store, p1, p2));
    c.require(check_zero(store, al.g.m - ar.g.m, bodies).empty() &&
                  check_equal(store, al.J, ar.J, bodies).empty(),
              std::string(id) + ": associativity");
  }
  {
    const CrossedModule& cm = shipped_cm("CM-C");
    FieldStore store(cm, 6);
    TwoConnection flat = make_connection(store, "", ConnectionKind::Flat);
    OneGauge psi = make_one_gauge(store, "p");
    Bodies bodies = bodies_for(store, 3, 109);
    TwoConnection moved = act_one_gauge(store, psi, flat);
    c.require(check_zero(store, moved.theta, bodies).empty() &&
                  check_zero(store, moved.Theta, bodies).empty(),
              "flat connections stay flat");
  }
  return c;
}

// --- criterion 4: 2-gauge stores, action audit, correction identities ----------------

Criterion criterion4() {
  Criterion c{4, "2-gauge stores, action on 1-gauge data, correction identities, fake-flat collapse"};
  for (const char* id : {"CM-C", "CM-A", "CM-H"}) {
    const CrossedModule& cm = shipped_cm(id);
    FieldStore store(cm, 6);
    TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
    OneGauge psi = make_one_gauge(store, "p");
    TwoGauge eps = make_two_gauge(store, "e", a, 1);
    Bodies bodies = bodies_for(store, 3, 113);
    c.absorb(run_checks(cartan_checks(store, bodies, std::string(id) + ".cartan")));
    c.absorb(run_checks(two_gauge_checks(store, eps, a, bodies, std::string(id) + ".defining")));
    OneGauge moved = act_two_gauge(store, eps, psi, a, 1);
    c.absorb(run_checks(one_gauge_checks(store, moved, bodies, std::string(id) + ".acted")));

    TwoConnection via = act_one_gauge(store, psi, a);
    TwoConnection via2 = act_one_gauge(store, moved, a);
    LieValuedForm corr = coact(cm, ad_g(cm, psi.g, a.theta), eps.E);
    LieValuedForm dcorr = store.apply(store.derivs().d(), corr);
    c.require(check_equal(store, via2.omega, via.omega, bodies).empty(),
              std::string(id) + ": unshifted actions agree");
    c.require(check_equal(store, via2.Omega, via.Omega + corr, bodies).empty(),
              std::string(id) + ": shifted correction");
    c.require(check_equal(store, via2.theta, via.theta - taudot(cm, corr), bodies).empty(),
              std::string(id) + ": curvature correction");
    c.require(check_equal(store, via2.Theta, via.Theta + dcorr + mudot2(cm, via.omega, corr), bodies)
                  .empty(),
              std::string(id) + ": shifted curvature correction");
  }
  {
    const CrossedModule& cm = shipped_cm("CM-A");
    FieldStore store(cm, 6);
    TwoConnection ff = make_connection(store, "", ConnectionKind::FakeFlat);
    OneGauge psi = make_one_gauge(store, "p");
    TwoGauge eps = make_two_gauge(store, "e", ff, 2);
    Bodies bodies = bodies_for(store, 3, 127);
    OneGauge moved = act_two_gauge(store, eps, psi, ff, 2);
    TwoConnection t1 = act_one_gauge(store, psi, ff);
    TwoConnection t2 = act_one_gauge(store, moved, ff);
    c.require(check_equal(store, t1.omega, t2.omega, bodies).empty() &&
                  check_equal(store, t1.Omega, t2.Omega, bodies).empty(),
              "actions collapse on fake flat connections");
  }
  return c;
}

// --- criterion 5: basic data, structure/transformation/matching, specialty ------------

Criterion criterion5() {
  Criterion c{5, "basic data annihilated by contractions; structure, transformation and matching laws"};
  for (const char* id : kCms) {
    const CrossedModule& cm = shipped_cm(id);
    FieldStore store(cm, 6);
    AdaptedCoordinates co = register_adapted(store, "a", 2);
    AdaptedCoordinates co2 = register_adapted(store, "b", 0);
    TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
    OneGauge psi = make_one_gauge(store, "p");
    TwoGauge eps = make_two_gauge(store, "e", a, 1);
    Bodies bodies = bodies_for(store, 2, 131);

    TwoConnection ab = basicify_connection(store, a, co);
    OneGauge pb = basicify_gauge(store, psi, co);
    BasicTwoGauge tb = basicify_two_gauge(store, eps, co);
    c.absorb(run_checks(basic_connection_checks(store, ab, bodies, std::string(id) + ".conn")));
    c.absorb(run_checks(basic_gauge_checks(store, pb, bodies, std::string(id) + ".gauge")));
    c.absorb(run_checks(basic_two_gauge_checks(store, tb, ab, bodies, std::string(id) + ".twogauge")));

    TwoConnection lhs = basicify_connection(store, act_one_gauge(store, psi, a), co);
    TwoConnection rhs = act_one_gauge(store, pb, ab);
    c.require(check_equal(store, lhs.omega, rhs.omega, bodies).empty() &&
                  check_equal(store, lhs.Omega, rhs.Omega, bodies).empty() &&
                  check_equal(store, lhs.theta, rhs.theta, bodies).empty() &&
                  check_equal(store, lhs.Theta, rhs.Theta, bodies).empty(),
              std::string(id) + ": basic transformation law");

    MatchingData m = matching_data(store, co2, co);
    c.absorb(run_checks(matching_recovery_checks(store, m, bodies, std::string(id) + ".match")));
    TwoConnection b2 = basicify_connection(store, a, co2);
    TwoConnection want = twist_connection(cm, ab, m.f_b, m.F_b, m.s_b, m.S_b);
    c.require(check_equal(store, b2.omega, want.omega, bodies).empty() &&
                  check_equal(store, b2.Omega, want.Omega, bodies).empty() &&
                  check_equal(store, b2.theta, want.theta, bodies).empty() &&
                  check_equal(store, b2.Theta, want.Theta, bodies).empty(),
              std::string(id) + ": connection matching law");
    OneGauge gb2 = basicify_gauge(store, psi, co2);
    OneGauge gwant = twist_gauge(cm, pb, m.f_b, m.F_b, m.s_b, m.S_b);
    c.require(check_zero(store, gb2.g.m - gwant.g.m, bodies).empty() &&
                  check_equal(store, gb2.J, gwant.J, bodies).empty() &&
                  check_equal(store, gb2.h, gwant.h, bodies).empty() &&
                  check_equal(store, gb2.K, gwant.K, bodies).empty(),
              std::string(id) + ": gauge matching law");
    BasicTwoGauge tb2 = basicify_two_gauge(store, eps, co2);
    BasicTwoGauge twant = twist_two_gauge(cm, tb.E_b, tb.C_b, m.f_b, m.F_b);
    c.require(check_zero(store, tb2.E_b.m - twant.E_b.m, bodies).empty() &&
                  check_equal(store, tb2.C_b, twant.C_b, bodies).empty(),
              std::string(id) + ": modification matching law");

    // special coordinates and special data: restricted shifts vanish
    std::vector<SymId> kill;
    for (const AdaptedCoordinates* cc : {&co, &co2}) {
      for (SymId s : form_symbols(cc->Gamma)) kill.push_back(s);
      for (SymId s : form_symbols(cc->Sigma)) kill.push_back(s);
    }
    for (SymId s : form_symbols(a.Omega)) kill.push_back(s);
    for (SymId s : form_symbols(a.Theta)) kill.push_back(s);
    for (SymId s : form_symbols(psi.J)) kill.push_back(s);
    for (SymId s : form_symbols(psi.K)) kill.push_back(s);
    FieldStore special = store.restricted(kill);
    c.require(restriction_vanishes(special, m.F_b, bodies).empty() &&
                  restriction_vanishes(special, m.S_b, bodies).empty(),
              std::string(id) + ": special matching shifts vanish");
    c.require(restriction_vanishes(special, ab.Omega, bodies).empty() &&
                  restriction_vanishes(special, ab.Theta, bodies).empty(),
              std::string(id) + ": special basic connection shifts vanish");
    c.require(restriction_vanishes(special, pb.J, bodies).empty() &&
                  restriction_vanishes(special, pb.K, bodies).empty(),
              std::string(id) + ": special basic gauge shifts vanish");
  }
  return c;
}

// --- criterion 6: covers, paracocycles, base cocycles, equivalences --------------------

Criterion criterion6() {
  Criterion c{6, "3- and 4-patch covers: base cocycle, paraequivalences, equivalences, specialty"};
  for (const char* id : {"CM-C", "CM-A", "CM-H"}) {
    CoverOptions opt;
    opt.patches = 3;
    CoverModel cover(shipped_cm(id), opt, 137);
    Bodies bodies = cover.sample_bodies(2, 139);
    const ParaData& p = cover.para();
    c.absorb(run_checks(paracocycle_audit(cover, p, bodies, std::string(id) + ".para")));
    c.absorb(run_checks(base_cocycle_checks(cover, p, bodies, std::string(id) + ".base")));
    c.absorb(run_checks(
        paraequivalence_audit(cover, p, cover.equivalence(0), bodies, std::string(id) + ".pe")));
    ParaData tp = cover.transform(p, cover.equivalence(0));
    c.absorb(
        run_checks(transform_checks(cover, p, cover.equivalence(0), tp, bodies, std::string(id) + ".tf")));
    c.absorb(run_checks(paracocycle_audit(cover, tp, bodies, std::string(id) + ".tfpara")));
    ParaData ep = cover.equivalent(p);
    c.absorb(run_checks(equivalence_checks(cover, p, ep, bodies, std::string(id) + ".eq")));
    c.absorb(run_checks(paracocycle_audit(cover, ep, bodies, std::string(id) + ".eqpara")));
    c.absorb(run_checks(paraequivalence_group_checks(cover, p, cover.equivalence(0),
                                                     cover.equivalence(1), bodies,
                                                     std::string(id) + ".grp")));

    CoverOptions sopt;
    sopt.patches = 2;
    sopt.special = true;
    CoverModel special(shipped_cm(id), sopt, 149);
    Bodies sb = special.sample_bodies(2, 151);
    c.absorb(run_checks(paracocycle_audit(special, special.para(), sb, std::string(id) + ".spara")));
    c.absorb(run_checks(
        specialty_checks(special, special.para(), &special.equivalence(0), sb, std::string(id) + ".sp")));
    CoverModel generic(shipped_cm(id), opt, 157);
    Bodies gb = generic.sample_bodies(2, 163);
    c.absorb(run_checks(specialty_checks(generic, generic.para(), &generic.equivalence(0), gb,
                                         std::string(id) + ".gn")));
  }
  {
    CoverOptions opt;
    opt.patches = 4;
    CoverModel cover(shipped_cm("CM-A"), opt, 167);
    Bodies bodies = cover.sample_bodies(1, 173);
    c.absorb(run_checks(base_cocycle_checks(cover, cover.para(), bodies, "tetra")));
  }
  return c;
}

// --- criterion 7: ordinary-theory degeneration -------------------------------------------

Criterion criterion7() {
  Criterion c{7, "trivial-module degeneration reproduces the ordinary theory term for term"};
  const CrossedModule& cm = shipped_cm("CM-T");
  FieldStore store(cm, 6);
  AdaptedCoordinates co = register_adapted(store, "a", 2);
  AdaptedCoordinates co2 = register_adapted(store, "b", 0);
  TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
  OneGauge psi = make_one_gauge(store, "p");
  Bodies bodies = bodies_for(store, 3, 179);
  const DerivSet& ds = store.derivs();
  const GroupElt& gam = store.group(co.gamma).elt;
  const GroupElt& gam2 = store.group(co2.gamma).elt;

  // ordinary connection relations
  c.require(check_equal(store, store.apply(ds.d(), a.omega),
                        bracket(cm, a.omega, a.omega) * Rational(-1, 2) + a.theta, bodies)
                .empty(),
            "ordinary curvature relation");
  c.require(check_equal(store, store.apply(ds.d(), a.theta), -bracket(cm, a.omega, a.theta), bodies)
                .empty(),
            "ordinary differential identity");
  for (size_t i = 0; i < cm.g.dim; ++i) {
    c.require(check_equal(store, store.apply(ds.jx(i), a.omega), store.x_basis(i), bodies).empty(),
              "ordinary contraction of the connection");
    c.require(check_zero(store, store.apply(ds.jx(i), a.theta), bodies).empty(),
              "ordinary contraction of the curvature");
    c.require(check_equal(store, store.apply(ds.lx(i), a.omega),
                          -bracket(cm, store.x_basis(i), a.omega), bodies)
                  .empty(),
              "ordinary Lie derivative of the connection");
  }
  // ordinary gauge relations and transform
  c.require(check_zero(store, store.apply(ds.d(), psi.g.m) * psi.g.minv + form_hat(cm, psi.h), bodies)
                .empty(),
            "ordinary shift relation");
  c.require(check_equal(store, store.apply(ds.d(), psi.h),
                        bracket(cm, psi.h, psi.h) * Rational(-1, 2), bodies)
                .empty(),
            "ordinary shift differential");
  TwoConnection moved = act_one_gauge(store, psi, a);
  c.require(check_equal(store, moved.omega, ad_g(cm, psi.g, a.omega) + psi.h, bodies).empty(),
            "ordinary gauge transform of the connection");
  c.require(check_equal(store, moved.theta, ad_g(cm, psi.g, a.theta), bodies).empty(),
            "ordinary gauge transform of the curvature");

  // ordinary basic data and matching
  TwoConnection ab = basicify_connection(store, a, co);
  c.require(check_equal(store, ab.omega, ad_g(cm, gam, a.omega - co.sigma), bodies).empty(),
            "ordinary basic connection datum");
  c.require(check_equal(store, ab.theta, ad_g(cm, gam, a.theta), bodies).empty(),
            "ordinary basic curvature datum");
  OneGauge pb = basicify_gauge(store, psi, co);
  c.require(check_zero(store, pb.g.m - (gam * psi.g * gam.inverse()).m, bodies).empty(),
            "ordinary basic transformation datum");
  c.require(check_equal(store, pb.h,
                        ad_g(cm, gam, psi.h - co.sigma + ad_g(cm, psi.g, co.sigma)), bodies)
                .empty(),
            "ordinary basic shift datum");
  c.require(check_equal(store, store.apply(ds.d(), ab.omega),
                        bracket(cm, ab.omega, ab.omega) * Rational(-1, 2) + ab.theta, bodies)
                .empty(),
            "ordinary basic curvature relation");
  MatchingData m = matching_data(store, co2, co);
  c.require(check_zero(store, m.f_b.m - (gam2 * gam.inverse()).m, bodies).empty(),
            "ordinary matching transformation datum");
  c.require(check_equal(store, m.s_b, ad_g(cm, gam, co2.sigma - co.sigma), bodies).empty(),
            "ordinary matching shift datum");
  SMat sleft = m.f_b.minv * store.apply(ds.d(), m.f_b.m);
  c.require(check_zero(store, sleft - form_hat(cm, m.s_b), bodies).empty(),
            "ordinary matching shift recovery");
  TwoConnection ab2 = basicify_connection(store, a, co2);
  c.require(check_equal(store, ab2.omega, ad_g(cm, m.f_b, ab.omega - m.s_b), bodies).empty() &&
                check_equal(store, ab2.theta, ad_g(cm, m.f_b, ab.theta), bodies).empty(),
            "ordinary connection matching");
  OneGauge pb2 = basicify_gauge(store, psi, co2);
  c.require(check_zero(store, pb2.g.m - (m.f_b * pb.g * m.f_b.inverse()).m, bodies).empty(),
            "ordinary gauge matching");
  c.require(check_equal(store, pb2.h,
                        ad_g(cm, m.f_b, pb.h - m.s_b + ad_g(cm, pb.g, m.s_b)), bodies)
                .empty(),
            "ordinary gauge shift matching");

  // pipeline end to end on the trivial module
  CoverOptions opt;
  opt.patches = 2;
  CoverModel cover(cm, opt, 181);
  Bodies cb = cover.sample_bodies(2, 191);
  c.absorb(run_checks(paracocycle_audit(cover, cover.para(), cb, "CM-T.para")));
  c.absorb(run_checks(base_cocycle_checks(cover, cover.para(), cb, "CM-T.base")));
  return c;
}

// --- criterion 8: seeded negative controls -----------------------------------------------

Criterion criterion8() {
  Criterion c{8, "seeded single-sign corruptions are detected with localized witnesses"};

  {  // ring: a product without the transposition sign is caught exactly
    auto table = std::make_shared<GeneratorTable>(6);
    SymId t1 = table->add("t1", 1), t2 = table->add("t2", 1);
    GradedScalar a = GradedScalar::generator(table, t1);
    GradedScalar b = GradedScalar::generator(table, t2);
    GradedScalar good = b * a;
    GradedScalar corrupted = a * b;  // sign dropped
    GradedScalar diff = good - corrupted;
    c.require(!diff.is_zero() && diff.terms().front().first.str(*table) == "t1*t2",
              "ring: transposition sign corruption with witness monomial");
  }
  {  // crossed module: corrupted taudot breaks equivariance
    CrossedModule bad = cm_conjugation();
    bad.taudot(0, 1) = 5;
    bad.tau_identity = false;
    AxiomReport rep = check_crossed_module(bad, 2, 193);
    bool caught = false;
    for (const auto& i : rep.items)
      if (!i.pass && i.axiom.find("equivariance") != std::string::npos) caught = true;
    c.require(caught, "crossed module: corrupted taudot detected");
  }
  {  // derived algebra: flipped sign in the bracket action component
    const CrossedModule& cm = shipped_cm("CM-C");
    auto table = std::make_shared<GeneratorTable>(6);
    SymId alpha = table->add("alpha", 1);
    DerivedAlgebraElt z, w;
    z.x = lv_zero(cm, Target::G, 0, table);
    z.X = lv_zero(cm, Target::E, 1, table);
    w = z;
    for (size_t k = 0; k < cm.g.dim; ++k) {
      z.x.coeff[k] = GradedScalar::generator(table, table->add("zx" + std::to_string(k), 0));
      w.x.coeff[k] = GradedScalar::generator(table, table->add("wx" + std::to_string(k), 0));
    }
    for (size_t k = 0; k < cm.e.dim; ++k) {
      z.X.coeff[k] = GradedScalar::generator(table, table->add("zX" + std::to_string(k), 1));
      w.X.coeff[k] = GradedScalar::generator(table, table->add("wX" + std::to_string(k), 1));
    }
    DerivedAlgebraElt good = dm_bracket(cm, z, w);
    DerivedAlgebraElt bad = good;
    bad.X = mudot2(cm, z.x, w.X) + mudot2(cm, w.x, z.X);  // flipped sign
    PackedDm direct = packed_bracket(cm, pack_dm(cm, z, alpha), pack_dm(cm, w, alpha));
    PackedDm viabad = pack_dm(cm, bad, alpha);
    bool caught = false;
    for (size_t i = 0; i < cm.e.dim; ++i)
      if (direct.e_coeff[i] != viabad.e_coeff[i]) caught = true;
    c.require(caught, "derived algebra: flipped action sign detected by the packed oracle");
  }
  {  // operation: flipped taudot term in the structure equation breaks [d,d]
    const CrossedModule& cm = shipped_cm("CM-C");
    FieldStore store(cm, 6);
    AdaptedCoordinates co = register_adapted(store, "", 0);
    store.set_form_image(co.sigma, store.derivs().d(),
                         bracket(cm, co.sigma, co.sigma) * Rational(-1, 2) - taudot(cm, co.Sigma));
    auto results = run_checks(cartan_checks(store, bodies_for(store, 2, 197)));
    bool caught = false;
    for (const auto& r : results)
      if (r.id == "cartan.dd" && !r.pass && r.witness.find("residue") != std::string::npos)
        caught = true;
    c.require(caught, "operation: flipped structure-equation sign detected with witness");
  }
  {  // gauge: corrupted action formula fails the defining-relation audit
    const CrossedModule& cm = shipped_cm("CM-A");
    FieldStore store(cm, 6);
    TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
    OneGauge psi = make_one_gauge(store, "p");
    Bodies bodies = bodies_for(store, 2, 199);
    TwoConnection bad = act_one_gauge(store, psi, a);
    bad.omega = ad_g(cm, psi.g, a.omega) - psi.h;  // flipped shift sign
    auto results = run_checks(connection_checks(store, bad, bodies, "bad"));
    bool caught = false;
    for (const auto& r : results)
      if (!r.pass && r.witness.find("residue") != std::string::npos) caught = true;
    c.require(caught, "gauge: corrupted action detected with witness");
  }
  {  // basic: corrupted basicification is not basic
    const CrossedModule& cm = shipped_cm("CM-C");
    FieldStore store(cm, 6);
    AdaptedCoordinates co = register_adapted(store, "", 2);
    TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
    Bodies bodies = bodies_for(store, 2, 211);
    LieValuedForm bad = ad_g(cm, store.group(co.gamma).elt, a.omega + co.sigma);  // flipped sign
    c.require(!check_basic(store, bad, bodies).empty(), "basic: corrupted datum is not basic");
  }
  {  // cocycle: corrupted trivializer localizes to the touched pair
    CoverOptions opt;
    opt.patches = 3;
    CoverModel cover(shipped_cm("CM-A"), opt, 223);
    Bodies bodies = cover.sample_bodies(2, 227);
    ParaData bad = cover.para();
    SMat delta = SMat::from_rat(cover.store().table(), cover.cm().e.rep[1]) * Rational(1, 3);
    GroupElt extra(Target::E,
                   SMat::identity(cover.store().table(), cover.cm().e.rep_dim) + delta,
                   SMat::identity(cover.store().table(), cover.cm().e.rep_dim) - delta);
    bad.T_b[{1, 2}] = bad.T_b[{1, 2}] * extra;
    auto results = run_checks(paracocycle_audit(cover, bad, bodies, "bad"));
    bool caught = false, localized = true;
    for (const auto& r : results)
      if (!r.pass) {
        caught = true;
        if (r.id.find("12") == std::string::npos && r.id.find("21") == std::string::npos)
          localized = false;
      }
    c.require(caught && localized, "cocycle: corrupted trivializer detected and localized");
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> cs;
  cs.push_back(criterion1());
  cs.push_back(criterion2());
  cs.push_back(criterion3());
  cs.push_back(criterion4());
  cs.push_back(criterion5());
  cs.push_back(criterion6());
  cs.push_back(criterion7());
  cs.push_back(criterion8());

  bool all = true;
  for (const auto& c : cs) {
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title
              << "\n";
    if (!c.pass) {
      all = false;
      size_t shown = 0;
      for (const auto& f : c.failures) {
        std::cout << "        " << f << "\n";
        if (++shown == 8) {
          std::cout << "        ... (" << c.failures.size() - shown << " more)\n";
          break;
        }
      }
    }
  }
  std::cout << (all ? "acceptance: all criteria hold\n" : "acceptance: FAILURES present\n");
  return all ? 0 : 1;
}
