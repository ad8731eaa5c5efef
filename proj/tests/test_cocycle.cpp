#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgt/cocycle.hpp"

using namespace hgt;

namespace {

void expect_all(const std::vector<CheckResult>& results, const char* ctx) {
  for (const auto& r : results) {
    INFO(ctx, " ", r.id, " ", r.witness);
    CHECK(r.pass);
  }
}

CoverOptions opts(size_t n, bool special = false) {
  CoverOptions o;
  o.patches = n;
  o.special = special;
  o.paraequivalences = 2;
  o.equivalence_shift = true;
  return o;
}

}  // namespace

TEST_CASE("single-patch cover is trivially consistent") {
  for (const char* id : {"CM-C", "CM-A"}) {
    CoverModel cover(shipped_cm(id), opts(1), 7);
    auto bodies = cover.sample_bodies(2, 11);
    expect_all(run_checks(paracocycle_audit(cover, cover.para(), bodies, "pc")), id);
    expect_all(run_checks(base_cocycle_checks(cover, cover.para(), bodies, "bc")), id);
  }
}

TEST_CASE("two-patch cover: paracocycle audit and overlap matching") {
  for (const char* id : {"CM-C", "CM-A", "CM-H", "CM-T"}) {
    CoverModel cover(shipped_cm(id), opts(2), 9);
    auto bodies = cover.sample_bodies(2, 13);
    expect_all(run_checks(paracocycle_audit(cover, cover.para(), bodies, "pc")), id);
    expect_all(run_checks(base_cocycle_checks(cover, cover.para(), bodies, "bc")), id);

    // Cartan relations still close on the enlarged store
    expect_all(run_checks(cartan_checks(cover.store(), bodies)), id);
  }
}

TEST_CASE("derived patch coordinates satisfy the coordinate operation relations") {
  const CrossedModule& cm = shipped_cm("CM-C");
  CoverModel cover(cm, opts(2), 17);
  const FieldStore& store = cover.store();
  const DerivSet& ds = store.derivs();
  auto bodies = cover.sample_bodies(2, 19);
  const PatchCoords& c1 = cover.coords(1);

  // gamma^{-1} j_Z gamma = 0, gamma^{-1} l_x gamma = x, l_X Gamma = mudot(gamma, X)
  for (size_t i = 0; i < cm.g.dim; ++i) {
    CHECK(check_zero(store, store.apply(ds.jx(i), c1.gamma.m), bodies).empty());
    SMat lhs = c1.gamma.minv * store.apply(ds.lx(i), c1.gamma.m);
    CHECK(check_zero(store, lhs - form_hat(cm, store.x_basis(i)), bodies).empty());
  }
  for (size_t a = 0; a < cm.e.dim; ++a) {
    LieValuedForm img = store.apply(ds.lX(a, 0), c1.Gamma);
    CHECK(check_equal(store, img, act_e(cm, c1.gamma, store.x_value(a, 0)), bodies).empty());
  }
  // structure equations of the derived coordinates
  LieValuedForm dsig = store.apply(ds.d(), c1.sigma);
  CHECK(check_equal(store, dsig,
                    bracket(cm, c1.sigma, c1.sigma) * Rational(-1, 2) + taudot(cm, c1.Sigma), bodies)
            .empty());
}

TEST_CASE("three-patch cover: triple overlap cocycle and base data") {
  for (const char* id : {"CM-C", "CM-A"}) {
    CoverModel cover(shipped_cm(id), opts(3), 23);
    auto bodies = cover.sample_bodies(2, 29);
    expect_all(run_checks(paracocycle_audit(cover, cover.para(), bodies, "pc")), id);
    expect_all(run_checks(base_cocycle_checks(cover, cover.para(), bodies, "bc")), id);
  }
}

TEST_CASE("four-patch cover: tetrahedron identity") {
  CoverModel cover(shipped_cm("CM-A"), opts(4), 31);
  auto bodies = cover.sample_bodies(1, 37);
  expect_all(run_checks(base_cocycle_checks(cover, cover.para(), bodies, "bc")), "CM-A");
}

TEST_CASE("paraequivalence: subordination, matching, transform, group law") {
  for (const char* id : {"CM-C", "CM-A"}) {
    CoverModel cover(shipped_cm(id), opts(3), 41);
    auto bodies = cover.sample_bodies(2, 43);
    const ParaData& p = cover.para();
    const ParaEquivData& q1 = cover.equivalence(0);
    const ParaEquivData& q2 = cover.equivalence(1);

    expect_all(run_checks(paraequivalence_audit(cover, p, q1, bodies, "pe")), id);

    ParaData tp = cover.transform(p, q1);
    expect_all(run_checks(paracocycle_audit(cover, tp, bodies, "tpc")), id);
    expect_all(run_checks(base_cocycle_checks(cover, tp, bodies, "tbc")), id);
    expect_all(run_checks(transform_checks(cover, p, q1, tp, bodies, "tf")), id);

    // round trip: transforming by q then its inverse recovers the original
    ParaData back = cover.transform(tp, cover.invert(q1));
    const FieldStore& store = cover.store();
    for (size_t i = 0; i < cover.patches(); ++i) {
      CHECK(check_equal(store, back.omega_bar[i], p.omega_bar[i], bodies).empty());
      CHECK(check_equal(store, back.Omega_bar[i], p.Omega_bar[i], bodies).empty());
    }

    expect_all(run_checks(paraequivalence_group_checks(cover, p, q1, q2, bodies, "grp")), id);
  }
}

TEST_CASE("equivalence of paracocycles and its displayed consequences") {
  for (const char* id : {"CM-C", "CM-A"}) {
    CoverModel cover(shipped_cm(id), opts(3), 47);
    auto bodies = cover.sample_bodies(2, 53);
    const ParaData& p = cover.para();
    ParaData tp = cover.equivalent(p);
    expect_all(run_checks(paracocycle_audit(cover, tp, bodies, "eqpc")), id);
    expect_all(run_checks(base_cocycle_checks(cover, tp, bodies, "eqbc")), id);
    expect_all(run_checks(equivalence_checks(cover, p, tp, bodies, "eq")), id);
  }
}

TEST_CASE("specialty suite: vanishing on special fixtures, witnesses otherwise") {
  for (const char* id : {"CM-A", "CM-C"}) {
    CoverModel special(shipped_cm(id), opts(2, true), 59);
    auto bodies = special.sample_bodies(2, 61);
    expect_all(run_checks(paracocycle_audit(special, special.para(), bodies, "spc")), id);
    expect_all(run_checks(
                   specialty_checks(special, special.para(), &special.equivalence(0), bodies, "sp")),
               id);

    CoverModel generic(shipped_cm(id), opts(2, false), 67);
    auto gb = generic.sample_bodies(2, 71);
    expect_all(
        run_checks(specialty_checks(generic, generic.para(), &generic.equivalence(0), gb, "gn")), id);
  }
}

TEST_CASE("coboundary pair data give identity triple transitions") {
  CoverOptions o = opts(3);
  o.generic_pairs = false;
  for (const char* id : {"CM-C", "CM-A"}) {
    CoverModel cover(shipped_cm(id), o, 87);
    auto bodies = cover.sample_bodies(1, 89);
    const FieldStore& store = cover.store();
    SMat one = SMat::identity(store.table(), cover.cm().e.rep_dim);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        for (size_t k = 0; k < 3; ++k) {
          if (i == j || j == k || i == k) continue;
          CHECK(check_zero(store, cover.Tbar(cover.para(), i, j, k).m - one, bodies).empty());
        }
    expect_all(run_checks(paracocycle_audit(cover, cover.para(), bodies, "cb")), id);
  }
}

TEST_CASE("equivalence is transitive along a chain") {
  CoverModel cover(shipped_cm("CM-A"), opts(3), 91);
  auto bodies = cover.sample_bodies(1, 93);
  ParaData p1 = cover.equivalent(cover.para());
  ParaData p2 = cover.equivalent(p1);
  // the two-step shift still exhibits a base ratio on every pair
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      GroupElt ratio = p2.T_b.at({i, j}).inverse() * cover.para().T_b.at({i, j});
      CHECK(cover.base_membership_group(ratio).empty());
    }
  expect_all(run_checks(paracocycle_audit(cover, p2, bodies, "chain")), "CM-A");
}

TEST_CASE("base membership is a faithful test for descended data") {
  CoverModel cover(shipped_cm("CM-A"), opts(2), 83);
  const FieldStore& store = cover.store();
  // barred seeds are base supported; patch coordinates are not
  CHECK(cover.base_membership(cover.para().omega_bar[0]).empty());
  CHECK(cover.base_membership(cover.para().omega_bar[1]).empty());
  CHECK_FALSE(cover.base_membership(cover.coords(0).Gamma).empty());
  CHECK_FALSE(cover.base_membership_group(cover.coords(0).gamma).empty());
  // on base-supported values the support test composed with inclusion is the
  // identity: equality of pullbacks forces equality of base data
  LieValuedForm diff = cover.para().omega_bar[0] - cover.para().omega_bar[0];
  CHECK(check_zero(store, diff, {}).empty());
  CHECK_FALSE(check_equal(store, cover.para().omega_bar[0], cover.para().omega_bar[1], {}).empty());
}

TEST_CASE("cover audits are symbolically exact") {
  CoverModel cover(shipped_cm("CM-C"), opts(3), 97);
  expect_all(run_checks(paracocycle_audit(cover, cover.para(), {}, "sym.p")), "CM-C");
  expect_all(run_checks(base_cocycle_checks(cover, cover.para(), {}, "sym.b")), "CM-C");
  expect_all(run_checks(paraequivalence_audit(cover, cover.para(), cover.equivalence(0), {}, "sym.q")),
             "CM-C");
}

TEST_CASE("negative control: corrupted triple datum is localized") {
  CoverModel cover(shipped_cm("CM-A"), opts(3), 73);
  auto bodies = cover.sample_bodies(2, 79);
  ParaData bad = cover.para();
  // corrupt one trivializer with a non-base, non-central tail direction
  SMat delta(cover.store().table(), cover.cm().e.rep_dim, cover.cm().e.rep_dim);
  delta = SMat::from_rat(cover.store().table(), cover.cm().e.rep[1]) * Rational(1, 2);
  GroupElt extra(Target::E, SMat::identity(cover.store().table(), cover.cm().e.rep_dim) + delta,
                 SMat::identity(cover.store().table(), cover.cm().e.rep_dim) - delta);
  bad.T_b[{1, 2}] = bad.T_b[{1, 2}] * extra;
  auto results = run_checks(paracocycle_audit(cover, bad, bodies, "bad"));
  bool found = false;
  for (const auto& r : results) {
    if (!r.pass) {
      found = true;
      CHECK(r.id.find("12") != std::string::npos);
    }
  }
  CHECK(found);
}
