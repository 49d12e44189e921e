#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cathom/corpus.hpp"
#include "cathom/homotopy.hpp"

using namespace cathom;

TEST_CASE("functor graph of the circle has the expected components") {
  FinCatPtr s1 = corpus::parallel_pair();
  FunctorGraph g = build_functor_graph(s1, s1);
  REQUIRE(g.functors.size() == 6);
  std::vector<int> comp = graph_components(g);
  std::set<int> distinct(comp.begin(), comp.end());
  // identity alone, swap alone, and the four endomorphisms through a point
  CHECK(distinct.size() == 3);
  size_t id_i = g.index_of(identity_functor(s1));
  size_t cx = g.index_of(constant_functor(s1, s1, s1->object_index("x")));
  size_t cy = g.index_of(constant_functor(s1, s1, s1->object_index("y")));
  CHECK(comp[cx] == comp[cy]);
  CHECK(comp[id_i] != comp[cx]);
}

TEST_CASE("serial and parallel edge sweeps agree") {
  FinCatPtr s1 = corpus::parallel_pair();
  ProductCat sq = product(s1, s1);
  FunctorGraph a = build_functor_graph(s1, sq.cat);
  FunctorGraph b = build_functor_graph_serial(s1, sq.cat);
  CHECK(a.functors.size() == b.functors.size());
  CHECK(a.edge == b.edge);
}

TEST_CASE("strong homotopy certificates check") {
  FinCatPtr s1 = corpus::parallel_pair();
  Functor cx = constant_functor(s1, s1, s1->object_index("x"));
  Functor cy = constant_functor(s1, s1, s1->object_index("y"));
  std::optional<StrongHomotopy> h = strong_homotopic(cx, cy);
  REQUIRE(h.has_value());
  CHECK(check_strong_homotopy(*h));
  CHECK(h->from() == cx);
  CHECK(h->to() == cy);

  CHECK_FALSE(strong_homotopic(identity_functor(s1), cx).has_value());
}

TEST_CASE("nat trans search finds components and respects naturality") {
  FinCatPtr c = corpus::interval();
  Functor id = identity_functor(c);
  Functor cy = constant_functor(c, c, c->object_index("y"));
  std::optional<NatTrans> t = nat_trans_search(id, cy);
  REQUIRE(t.has_value());
  CHECK(is_natural(*t));
  CHECK_FALSE(nat_trans_search(cy, id).has_value());
}

TEST_CASE("weak homotopy from a strong one validates") {
  FinCatPtr c = corpus::interval();
  std::optional<WeakHomotopy> w =
      weak_homotopic(identity_functor(c), constant_functor(c, c, c->object_index("y")));
  REQUIRE(w.has_value());
  CHECK(check_weak_homotopy(*w));
  CHECK(check_weak_homotopy(*w, 3, /*check_composites=*/true));
}

TEST_CASE("interval is contractible, the circle is not") {
  CHECK(is_contractible(corpus::interval()).has_value());
  CHECK(is_contractible(corpus::zigzag(4)).has_value());
  CHECK_FALSE(is_contractible(corpus::parallel_pair()).has_value());
  CHECK_FALSE(is_contractible(corpus::discrete(2)).has_value());
}

TEST_CASE("homotopy equivalence between the point and the interval") {
  std::optional<HomotopyEquivalence> e =
      homotopy_equivalent(corpus::terminal(), corpus::interval());
  REQUIRE(e.has_value());
  CHECK(check_strong_homotopy(e->unit));
  CHECK(check_strong_homotopy(e->counit));
  CHECK_FALSE(homotopy_equivalent(corpus::terminal(), corpus::parallel_pair()).has_value());
}

TEST_CASE("oracle caches graphs across queries") {
  HomotopyOracle o;
  FinCatPtr s1 = corpus::parallel_pair();
  const FunctorGraph& g1 = o.graph(s1, s1);
  const FunctorGraph& g2 = o.graph(s1, s1);
  CHECK(&g1 == &g2);
  CHECK(o.homotopic(constant_functor(s1, s1, 0), constant_functor(s1, s1, 1)).has_value());
}
