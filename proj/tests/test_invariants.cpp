#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cathom/corpus.hpp"
#include "cathom/invariants.hpp"

using namespace cathom;

TEST_CASE("ccat of contractible categories is zero") {
  for (const FinCatPtr& c : {corpus::terminal(), corpus::interval(), corpus::zigzag(2)}) {
    InvariantResult r = ccat(c, Mode::Weak);
    REQUIRE(r.kind == InvariantResult::Value);
    CHECK(r.value == 0);
    CHECK(revalidate_cover_certificate(c, r.certificate, r.value));
  }
}

TEST_CASE("ccat of the circle is one") {
  FinCatPtr s1 = corpus::parallel_pair();
  for (Mode m : {Mode::Weak, Mode::Strong}) {
    InvariantResult r = ccat(s1, m);
    REQUIRE(r.kind == InvariantResult::Value);
    CHECK(r.value == 1);
    CHECK(revalidate_cover_certificate(s1, r.certificate, r.value));
  }
}

TEST_CASE("ccat of discrete categories counts components") {
  for (int n : {2, 3}) {
    InvariantResult r = ccat(corpus::discrete(n), Mode::Weak);
    REQUIRE(r.kind == InvariantResult::Value);
    CHECK(r.value == n - 1);
  }
}

TEST_CASE("cdist basics") {
  FinCatPtr c = corpus::interval();
  Functor id = identity_functor(c);
  Functor cy = constant_functor(c, c, c->object_index("y"));
  InvariantResult r = cdist(id, cy, Mode::Weak);
  REQUIRE(r.kind == InvariantResult::Value);
  CHECK(r.value == 0);

  FinCatPtr s1 = corpus::parallel_pair();
  InvariantResult d = cdist(identity_functor(s1), constant_functor(s1, s1, 0), Mode::Weak);
  REQUIRE(d.kind == InvariantResult::Value);
  CHECK(d.value == ccat(s1, Mode::Weak).value);
}

TEST_CASE("ctc of contractible categories is zero") {
  for (const FinCatPtr& c : {corpus::terminal(), corpus::interval()}) {
    InvariantResult r = ctc(c, Mode::Weak);
    REQUIRE(r.kind == InvariantResult::Value);
    CHECK(r.value == 0);
  }
}

TEST_CASE("ctc equals the distance between the product projections") {
  FinCatPtr c = corpus::interval();
  ProductCat cc = product(c, c);
  InvariantResult t = ctc(c, Mode::Weak);
  InvariantResult d = cdist(cc.pr1, cc.pr2, Mode::Weak);
  REQUIRE(t.kind == InvariantResult::Value);
  REQUIRE(d.kind == InvariantResult::Value);
  CHECK(t.value == d.value);
}

TEST_CASE("secat of a projection with a section is zero") {
  FinCatPtr c = corpus::interval();
  ProductCat cc = product(c, c);
  InvariantResult r = secat(cc.pr1, Mode::Strict);
  REQUIRE(r.kind == InvariantResult::Value);
  CHECK(r.value == 0);
  InvariantResult s = svarc_genus(cc.pr1, Mode::Weak);
  REQUIRE(s.kind == InvariantResult::Value);
  CHECK(s.value == 0);
}

TEST_CASE("weak and strong modes agree on the corpus") {
  for (const FinCatPtr& c : {corpus::terminal(), corpus::interval(), corpus::parallel_pair(),
                             corpus::zigzag(2), corpus::discrete(2)}) {
    InvariantResult w = ccat(c, Mode::Weak);
    InvariantResult s = ccat(c, Mode::Strong);
    CHECK(w.kind == s.kind);
    CHECK(w.value == s.value);
  }
}

TEST_CASE("verify_relations passes on small categories") {
  for (const FinCatPtr& c : {corpus::terminal(), corpus::interval(), corpus::parallel_pair()}) {
    RelationReport rep = verify_relations(c);
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.items.empty());
  }
}

TEST_CASE("budget exhaustion reports a lower bound instead of a value") {
  InvariantResult r = ctc(corpus::parallel_pair(), Mode::Weak);
  CHECK(r.kind == InvariantResult::Unknown);
  CHECK(r.budget_exhausted);
  CHECK(r.lower >= 2);  // the default combination budget stops short of the value

  Budgets roomy;
  roomy.cover_budget = 200000;
  InvariantResult full = ctc(corpus::parallel_pair(), Mode::Weak, roomy);
  REQUIRE(full.kind == InvariantResult::Value);
  CHECK(full.value == 3);
}

TEST_CASE("strict section search on a piece") {
  FinCatPtr c = corpus::interval();
  ProductCat cc = product(c, c);
  Subcategory full = full_subcategory(c, {0, 1});
  auto [realized, incl] = realize_subcategory(full);
  std::optional<Functor> s = find_strict_section(cc.pr1, full, realized, incl);
  REQUIRE(s.has_value());
  Functor back = compose_functors(cc.pr1, *s);
  CHECK(back.obj_map == incl.obj_map);
  CHECK(back.mor_map == incl.mor_map);
}
