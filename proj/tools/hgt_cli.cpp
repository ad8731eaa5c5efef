#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hgt/scenario.hpp"

using namespace hgt;

namespace {

void emit(const Report& rep, const std::string& out_path) {
  std::string text = report_to_json(rep);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw error("cannot write report: " + out_path);
    out << text << "\n";
  }
  size_t failed = rep.fail_count();
  std::cerr << rep.suite << ": " << rep.results.size() - failed << "/" << rep.results.size()
            << " identities hold\n";
}

using Bodies = std::vector<std::map<SymId, Rational>>;

void cartan_suite(Report& rep, const CrossedModule& cm, int truncation, int nbodies, uint64_t seed,
                  bool parallel) {
  FieldStore store(cm, truncation);
  register_adapted(store, "", 2);
  Rng rng(seed);
  Bodies bodies;
  for (int i = 0; i < nbodies; ++i) bodies.push_back(store.sample_bodies(rng));
  append_results(rep, run_checks(cartan_checks(store, bodies), parallel));
}

void connection_suite(Report& rep, const CrossedModule& cm, int truncation, int nbodies, uint64_t seed,
                      bool parallel) {
  FieldStore store(cm, truncation);
  TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
  Rng rng(seed);
  Bodies bodies;
  for (int i = 0; i < nbodies; ++i) bodies.push_back(store.sample_bodies(rng));
  append_results(rep, run_checks(cartan_checks(store, bodies, "conn.cartan"), parallel));
  append_results(rep, run_checks(connection_checks(store, a, bodies, "conn"), parallel));
}

void gauge1_suite(Report& rep, const CrossedModule& cm, int truncation, int nbodies, uint64_t seed,
                  bool parallel) {
  FieldStore store(cm, truncation);
  TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
  OneGauge p1 = make_one_gauge(store, "p1");
  OneGauge p2 = make_one_gauge(store, "p2");
  Rng rng(seed);
  Bodies bodies;
  for (int i = 0; i < nbodies; ++i) bodies.push_back(store.sample_bodies(rng));
  append_results(rep, run_checks(cartan_checks(store, bodies, "gauge1.cartan"), parallel));
  append_results(rep, run_checks(one_gauge_checks(store, p1, bodies, "gauge1.defining"), parallel));
  TwoConnection moved = act_one_gauge(store, p1, a);
  append_results(rep, run_checks(connection_checks(store, moved, bodies, "gauge1.acted"), parallel));
  std::vector<Check> extra;
  extra.push_back({"gauge1.leftaction", "acting twice equals acting by the composite", [&, bodies] {
                     TwoConnection lhs = act_one_gauge(store, p2, act_one_gauge(store, p1, a));
                     TwoConnection rhs = act_one_gauge(store, compose_one_gauge(store, p2, p1), a);
                     std::string w = check_equal(store, lhs.omega, rhs.omega, bodies);
                     if (w.empty()) w = check_equal(store, lhs.Omega, rhs.Omega, bodies);
                     if (w.empty()) w = check_equal(store, lhs.theta, rhs.theta, bodies);
                     if (w.empty()) w = check_equal(store, lhs.Theta, rhs.Theta, bodies);
                     return w;
                   }});
  extra.push_back({"gauge1.group", "identity, inverse and associativity of composition", [&, bodies] {
                     OneGauge e = one_gauge_identity(store);
                     OneGauge li = compose_one_gauge(store, p1, invert_one_gauge(store, p1));
                     std::string w =
                         check_zero(store, li.g.m - SMat::identity(store.table(), cm.g.rep_dim), bodies);
                     if (w.empty()) w = check_equal(store, li.J, e.J, bodies);
                     if (w.empty()) {
                       OneGauge l = compose_one_gauge(store, compose_one_gauge(store, p2, p1), p1);
                       OneGauge r = compose_one_gauge(store, p2, compose_one_gauge(store, p1, p1));
                       w = check_zero(store, l.g.m - r.g.m, bodies);
                       if (w.empty()) w = check_equal(store, l.J, r.J, bodies);
                     }
                     return w;
                   }});
  append_results(rep, run_checks(extra, parallel));
}

void gauge2_suite(Report& rep, const CrossedModule& cm, int truncation, int nbodies, uint64_t seed,
                  bool parallel) {
  FieldStore store(cm, truncation);
  TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
  OneGauge psi = make_one_gauge(store, "p");
  TwoGauge eps = make_two_gauge(store, "e", a, 1);
  Rng rng(seed);
  Bodies bodies;
  for (int i = 0; i < nbodies; ++i) bodies.push_back(store.sample_bodies(rng));
  append_results(rep, run_checks(cartan_checks(store, bodies, "gauge2.cartan"), parallel));
  append_results(rep, run_checks(two_gauge_checks(store, eps, a, bodies, "gauge2.defining"), parallel));
  OneGauge moved = act_two_gauge(store, eps, psi, a, 1);
  append_results(rep, run_checks(one_gauge_checks(store, moved, bodies, "gauge2.acted"), parallel));
  std::vector<Check> extra;
  extra.push_back({"gauge2.corrections", "the two connection actions differ by the displayed terms",
                   [&, bodies] {
                     TwoConnection via = act_one_gauge(store, psi, a);
                     TwoConnection via2 = act_one_gauge(store, moved, a);
                     LieValuedForm corr = coact(cm, ad_g(cm, psi.g, a.theta), eps.E);
                     std::string w = check_equal(store, via2.omega, via.omega, bodies);
                     if (w.empty()) w = check_equal(store, via2.Omega, via.Omega + corr, bodies);
                     if (w.empty())
                       w = check_equal(store, via2.theta, via.theta - taudot(cm, corr), bodies);
                     if (w.empty()) {
                       LieValuedForm dcorr = store.apply(store.derivs().d(), corr);
                       w = check_equal(store, via2.Theta,
                                       via.Theta + dcorr + mudot2(cm, via.omega, corr), bodies);
                     }
                     return w;
                   }});
  append_results(rep, run_checks(extra, parallel));
}

void basic_suite(Report& rep, const CrossedModule& cm, int truncation, int nbodies, uint64_t seed,
                 bool parallel) {
  FieldStore store(cm, truncation);
  AdaptedCoordinates co = register_adapted(store, "a", 2);
  TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
  OneGauge psi = make_one_gauge(store, "p");
  TwoGauge eps = make_two_gauge(store, "e", a, 1);
  Rng rng(seed);
  Bodies bodies;
  for (int i = 0; i < nbodies; ++i) bodies.push_back(store.sample_bodies(rng));
  TwoConnection ab = basicify_connection(store, a, co);
  OneGauge pb = basicify_gauge(store, psi, co);
  BasicTwoGauge tb = basicify_two_gauge(store, eps, co);
  append_results(rep, run_checks(basic_connection_checks(store, ab, bodies, "basic.conn"), parallel));
  append_results(rep, run_checks(basic_gauge_checks(store, pb, bodies, "basic.gauge"), parallel));
  append_results(rep,
                 run_checks(basic_two_gauge_checks(store, tb, ab, bodies, "basic.twogauge"), parallel));
  std::vector<Check> extra;
  extra.push_back({"basic.transform", "basic data of the transformed connection as displayed",
                   [&, bodies] {
                     TwoConnection lhs = basicify_connection(store, act_one_gauge(store, psi, a), co);
                     TwoConnection rhs = act_one_gauge(store, pb, ab);
                     std::string w = check_equal(store, lhs.omega, rhs.omega, bodies);
                     if (w.empty()) w = check_equal(store, lhs.Omega, rhs.Omega, bodies);
                     if (w.empty()) w = check_equal(store, lhs.theta, rhs.theta, bodies);
                     if (w.empty()) w = check_equal(store, lhs.Theta, rhs.Theta, bodies);
                     return w;
                   }});
  append_results(rep, run_checks(extra, parallel));
}

void matching_suite(Report& rep, const CrossedModule& cm, int truncation, int nbodies, uint64_t seed,
                    bool parallel) {
  FieldStore store(cm, truncation);
  AdaptedCoordinates co = register_adapted(store, "a", 2);
  AdaptedCoordinates co2 = register_adapted(store, "b", 0);
  TwoConnection a = make_connection(store, "", ConnectionKind::Generic);
  OneGauge psi = make_one_gauge(store, "p");
  Rng rng(seed);
  Bodies bodies;
  for (int i = 0; i < nbodies; ++i) bodies.push_back(store.sample_bodies(rng));
  MatchingData m = matching_data(store, co2, co);
  append_results(rep, run_checks(matching_recovery_checks(store, m, bodies, "matching"), parallel));
  std::vector<Check> extra;
  extra.push_back({"matching.connection", "connection data match across the two families", [&, bodies] {
                     TwoConnection b = basicify_connection(store, a, co);
                     TwoConnection b2 = basicify_connection(store, a, co2);
                     TwoConnection want = twist_connection(cm, b, m.f_b, m.F_b, m.s_b, m.S_b);
                     std::string w = check_equal(store, b2.omega, want.omega, bodies);
                     if (w.empty()) w = check_equal(store, b2.Omega, want.Omega, bodies);
                     if (w.empty()) w = check_equal(store, b2.theta, want.theta, bodies);
                     if (w.empty()) w = check_equal(store, b2.Theta, want.Theta, bodies);
                     return w;
                   }});
  extra.push_back({"matching.gauge", "gauge data match across the two families", [&, bodies] {
                     OneGauge gb = basicify_gauge(store, psi, co);
                     OneGauge gb2 = basicify_gauge(store, psi, co2);
                     OneGauge want = twist_gauge(cm, gb, m.f_b, m.F_b, m.s_b, m.S_b);
                     std::string w = check_zero(store, gb2.g.m - want.g.m, bodies);
                     if (w.empty()) w = check_equal(store, gb2.J, want.J, bodies);
                     if (w.empty()) w = check_equal(store, gb2.h, want.h, bodies);
                     if (w.empty()) w = check_equal(store, gb2.K, want.K, bodies);
                     return w;
                   }});
  extra.push_back({"matching.special", "special families have vanishing restricted shift data",
                   [&, bodies] {
                     std::vector<SymId> kill;
                     for (const AdaptedCoordinates* c : {&co, &co2}) {
                       for (SymId s : form_symbols(c->Gamma)) kill.push_back(s);
                       for (SymId s : form_symbols(c->Sigma)) kill.push_back(s);
                     }
                     FieldStore special = store.restricted(kill);
                     std::string w = restriction_vanishes(special, m.F_b, bodies);
                     if (w.empty()) w = restriction_vanishes(special, m.S_b, bodies);
                     return w;
                   }});
  append_results(rep, run_checks(extra, parallel));
}

void cocycle_suite(Report& rep, const CrossedModule& cm, int truncation, int nbodies, uint64_t seed,
                   size_t patches, bool parallel) {
  CoverOptions opt;
  opt.patches = patches;
  opt.truncation = truncation;
  CoverModel cover(cm, opt, seed);
  Bodies bodies = cover.sample_bodies(nbodies, seed + 1);
  const ParaData& p = cover.para();
  append_results(rep, run_checks(paracocycle_audit(cover, p, bodies, "cocycle.para"), parallel));
  append_results(rep, run_checks(base_cocycle_checks(cover, p, bodies, "cocycle.base"), parallel));
  append_results(
      rep, run_checks(paraequivalence_audit(cover, p, cover.equivalence(0), bodies, "cocycle.equiv"),
                      parallel));
  ParaData tp = cover.transform(p, cover.equivalence(0));
  append_results(rep, run_checks(transform_checks(cover, p, cover.equivalence(0), tp, bodies,
                                                  "cocycle.transform"),
                                 parallel));
  ParaData ep = cover.equivalent(p);
  append_results(rep, run_checks(equivalence_checks(cover, p, ep, bodies, "cocycle.shift"), parallel));
  append_results(rep, run_checks(paraequivalence_group_checks(cover, p, cover.equivalence(0),
                                                              cover.equivalence(1), bodies,
                                                              "cocycle.group"),
                                 parallel));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact identity checker for crossed-module gauge structures"};
  app.require_subcommand(1);

  int truncation = 6;
  if (const char* env = std::getenv("HGT_TRUNCATION")) truncation = std::atoi(env);

  // verify ---------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run identity suites against a crossed module");
  std::string cm_id = "CM-C", suite = "all", out_path;
  uint64_t seed = 1;
  int nbodies = 3;
  size_t patches = 3;
  bool serial = false;
  verify->add_option("--cm", cm_id, "shipped id (CM-T, CM-C, CM-A, CM-H) or definition file");
  verify->add_option("--suite", suite,
                     "cartan | connection | gauge1 | gauge2 | basic | matching | cocycle | all");
  verify->add_option("--seed", seed, "body sampling seed");
  verify->add_option("--truncation", truncation, "ring truncation degree (>= 4)");
  verify->add_option("--bodies", nbodies, "number of sampled body assignments");
  verify->add_option("--patches", patches, "cover size for the cocycle suite");
  verify->add_option("--out", out_path, "report file (default: stdout)");
  verify->add_flag("--serial", serial, "run the identity batch on one thread");

  // cocycle --------------------------------------------------------------------
  auto* coc = app.add_subcommand("cocycle", "check or transform a cover scenario");
  std::string scenario_path, action = "check", write_back;
  size_t equiv_index = 0;
  coc->add_option("--scenario", scenario_path, "scenario file")->required();
  coc->add_option("--action", action, "check | transform | equivalence");
  coc->add_option("--equivalence", equiv_index, "paraequivalence index used by transform");
  coc->add_option("--out", out_path, "report file (default: stdout)");
  coc->add_option("--write-back", write_back, "write the transformed scenario to this file");
  coc->add_flag("--serial", serial, "run the identity batch on one thread");

  // random ---------------------------------------------------------------------
  auto* rnd = app.add_subcommand("random", "emit a reproducible random scenario");
  std::string kind = "paracocycle";
  rnd->add_option("--kind", kind, "paracocycle | transformed | special");
  rnd->add_option("--cm", cm_id, "crossed module id or file");
  rnd->add_option("--seed", seed, "scenario seed");
  rnd->add_option("--patches", patches, "cover size");
  rnd->add_option("--out", out_path, "scenario file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) {
      if (truncation < 4) throw error("truncation degree must be at least 4");
      CrossedModule cm = resolve_crossed_module(cm_id);
      Report rep;
      rep.suite = suite;
      rep.cm = cm.name;
      rep.seed = seed;
      rep.truncation = truncation;
      bool parallel = !serial;
      bool all = suite == "all";
      if (all || suite == "cartan") cartan_suite(rep, cm, truncation, nbodies, seed, parallel);
      if (all || suite == "connection") connection_suite(rep, cm, truncation, nbodies, seed, parallel);
      if (all || suite == "gauge1") gauge1_suite(rep, cm, truncation, nbodies, seed, parallel);
      if (all || suite == "gauge2") gauge2_suite(rep, cm, truncation, nbodies, seed, parallel);
      if (all || suite == "basic") basic_suite(rep, cm, truncation, nbodies, seed, parallel);
      if (all || suite == "matching") matching_suite(rep, cm, truncation, nbodies, seed, parallel);
      if (all || suite == "cocycle")
        cocycle_suite(rep, cm, truncation, nbodies, seed, patches, parallel);
      if (rep.results.empty()) throw error("unknown suite: " + suite);
      emit(rep, out_path);
      return rep.all_pass() ? 0 : 1;
    }

    if (app.got_subcommand(coc)) {
      Scenario s = load_scenario_file(scenario_path);
      CrossedModule cm = resolve_crossed_module(s.cm_id);
      ScenarioRun run = run_scenario(cm, s);
      Report rep;
      rep.suite = "cocycle." + action;
      rep.cm = cm.name;
      rep.seed = s.seed;
      rep.truncation = s.truncation;
      bool parallel = !serial;
      const CoverModel& cover = *run.cover;
      if (action == "check") {
        append_results(rep, run_checks(paracocycle_audit(cover, run.data, run.bodies, "para"), parallel));
        append_results(rep, run_checks(base_cocycle_checks(cover, run.data, run.bodies, "base"), parallel));
        if (cover.equivalence_count() > 0 && s.transforms.empty())
          append_results(rep, run_checks(paraequivalence_audit(cover, run.data, cover.equivalence(0),
                                                               run.bodies, "equiv"),
                                         parallel));
        if (s.special)
          append_results(rep, run_checks(specialty_checks(cover, run.data,
                                                          cover.equivalence_count()
                                                              ? &cover.equivalence(0)
                                                              : nullptr,
                                                          run.bodies, "special"),
                                         parallel));
      } else if (action == "transform") {
        if (equiv_index >= cover.equivalence_count()) throw error("no such paraequivalence");
        ParaEquivData q = cover.equivalence(equiv_index);
        ParaData tp = cover.transform(run.data, q);
        append_results(rep, run_checks(transform_checks(cover, run.data, q, tp, run.bodies, "transform"),
                                       parallel));
        append_results(rep, run_checks(paracocycle_audit(cover, tp, run.bodies, "para"), parallel));
        append_results(rep, run_checks(base_cocycle_checks(cover, tp, run.bodies, "base"), parallel));
        if (!write_back.empty()) {
          Scenario s2 = s;
          s2.transforms.push_back({equiv_index, false});
          std::ofstream out(write_back);
          if (!out) throw error("cannot write scenario: " + write_back);
          out << scenario_to_json(s2) << "\n";
        }
      } else if (action == "equivalence") {
        ParaData tp = cover.equivalent(run.data);
        append_results(rep, run_checks(equivalence_checks(cover, run.data, tp, run.bodies, "shift"),
                                       parallel));
        append_results(rep, run_checks(paracocycle_audit(cover, tp, run.bodies, "para"), parallel));
        append_results(rep, run_checks(base_cocycle_checks(cover, tp, run.bodies, "base"), parallel));
      } else {
        throw error("unknown action: " + action);
      }
      emit(rep, out_path);
      return rep.all_pass() ? 0 : 1;
    }

    if (app.got_subcommand(rnd)) {
      Scenario s;
      s.cm_id = cm_id;
      s.seed = seed;
      s.patches = patches;
      s.truncation = truncation;
      if (kind == "paracocycle") {
        // defaults
      } else if (kind == "transformed") {
        s.transforms.push_back({0, false});
      } else if (kind == "special") {
        s.special = true;
        s.patches = std::min<size_t>(patches, 2);
      } else {
        throw error("unknown scenario kind: " + kind);
      }
      resolve_crossed_module(cm_id);  // validate before emitting
      std::string text = scenario_to_json(s);
      if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
      } else {
        std::ofstream out(out_path);
        if (!out) throw error("cannot write scenario: " + out_path);
        out << text << "\n";
      }
      return 0;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
