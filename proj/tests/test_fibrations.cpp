#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cathom/corpus.hpp"
#include "cathom/fibrations.hpp"

using namespace cathom;

TEST_CASE("sampled endpoint lifting problems are valid and lift") {
  FinCatPtr s1 = corpus::parallel_pair();
  std::vector<PiLiftProblem> problems = sample_pi_problems(s1, 10, /*seed=*/5);
  CHECK_FALSE(problems.empty());
  for (const PiLiftProblem& p : problems) {
    REQUIRE(check_pi_lift_problem(p));
    PathHomotopy lift = path_fibration_lift(p);
    CHECK(lift.length_preserving);
    CHECK(validate_pi_lift(p, lift));
  }
}

TEST_CASE("fibrant replacement factors the functor") {
  FinCatPtr c = corpus::interval();
  Functor f = constant_functor(c, corpus::parallel_pair(), 0);
  FibrantReplacement r = fibrant_replacement(f, /*max_len=*/2);
  CHECK(compose_functors(r.f2, r.f1) == f);
  CHECK(compose_functors(r.g, r.f1) == identity_functor(c));
  CHECK(check_weak_homotopy(r.contraction));
}

TEST_CASE("fibrant lift through the replacement validates") {
  FinCatPtr c = corpus::interval();
  FinCatPtr s1 = corpus::parallel_pair();
  Functor f = constant_functor(c, s1, 0);
  FibrantReplacement r = fibrant_replacement(f, /*max_len=*/4);
  BatterySpec spec;
  spec.max_problems = 5;
  spec.seed = 11;
  std::vector<StrongLiftProblem> problems = sample_lift_problems(r.f2, spec);
  // keep problems whose floors leave room for the walk inside the truncation
  auto fits = [&](const StrongLiftProblem& p) {
    int n = static_cast<int>(p.h.links.size());
    for (int e : p.floor.obj_map) {
      int len = r.ef.obj_paths[e].length() + n;
      if (len + len % 2 > r.max_len) return false;
    }
    return true;
  };
  int ran = 0;
  for (const StrongLiftProblem& p : problems) {
    if (!fits(p)) continue;
    REQUIRE(check_lift_problem(r.f2, p));
    StrongHomotopy lift = fibrant_lift(r, p);
    CHECK(validate_lift(r.f2, p, lift));
    ++ran;
  }
  CHECK(ran > 0);
}

TEST_CASE("registered fibrations lift their batteries") {
  FinCatPtr c = corpus::interval();
  FinCatPtr pt = corpus::terminal();
  ProductCat cc = product(c, c);

  BatterySpec spec;
  spec.max_problems = 20;
  spec.seed = 3;

  Fibration triv = trivial_fibration(c, pt);
  Fibration proj = projection_fibration(c, c, cc, pt);
  for (const Fibration* fib : {&triv, &proj}) {
    std::vector<StrongLiftProblem> problems = sample_lift_problems(fib->p, spec);
    for (const StrongLiftProblem& p : problems) {
      StrongHomotopy lift = fib->lift(p);
      CHECK(validate_lift(fib->p, p, lift));
    }
  }
}

TEST_CASE("pullback and composite fibrations lift") {
  FinCatPtr c = corpus::interval();
  FinCatPtr pt = corpus::terminal();
  ProductCat cc = product(c, c);
  Fibration proj = projection_fibration(c, c, cc, pt);

  Functor cy = constant_functor(c, c, c->object_index("y"));
  PullbackCat pb = pullback(proj.p, cy);
  Fibration pulled = pullback_fibration(proj, cy, pb);
  BatterySpec spec;
  spec.max_problems = 10;
  spec.seed = 9;
  for (const StrongLiftProblem& p : sample_lift_problems(pulled.p, spec)) {
    StrongHomotopy lift = pulled.lift(p);
    CHECK(validate_lift(pulled.p, p, lift));
  }

  Fibration comp = compose_fibrations(trivial_fibration(c, pt), proj);
  for (const StrongLiftProblem& p : sample_lift_problems(comp.p, spec)) {
    StrongHomotopy lift = comp.lift(p);
    CHECK(validate_lift(comp.p, p, lift));
  }
}

TEST_CASE("check_fibration verdicts agree between modes") {
  FinCatPtr c = corpus::interval();
  FinCatPtr pt = corpus::terminal();
  ProductCat cc = product(c, c);
  BatterySpec spec;
  spec.max_problems = 30;
  spec.seed = 7;

  FibrationReport good = check_fibration(projection_fibration(c, c, cc, pt).p, spec);
  CHECK(good.verdicts_agree);
  CHECK(good.all_lifted_strong);
  CHECK(good.all_lifted_weak);

  // the inclusion of {x} into the interval is not a fibration
  Subcategory x_only = full_subcategory(c, {c->object_index("x")});
  auto [xcat, incl] = realize_subcategory(x_only);
  FibrationReport bad = check_fibration(incl, spec);
  CHECK(bad.verdicts_agree);
  CHECK_FALSE(bad.all_lifted_strong);
  CHECK_FALSE(bad.all_lifted_weak);
}

TEST_CASE("exhaustive strong lift search matches the registered procedure") {
  FinCatPtr c = corpus::interval();
  FinCatPtr pt = corpus::terminal();
  ProductCat cc = product(c, c);
  Fibration proj = projection_fibration(c, c, cc, pt);
  BatterySpec spec;
  spec.max_problems = 5;
  spec.seed = 2;
  for (const StrongLiftProblem& p : sample_lift_problems(proj.p, spec)) {
    std::optional<StrongHomotopy> found = search_strong_lift(proj.p, p);
    REQUIRE(found.has_value());
    CHECK(validate_lift(proj.p, p, *found));
    CHECK(has_weak_lp_lift(proj.p, p));
  }
}
