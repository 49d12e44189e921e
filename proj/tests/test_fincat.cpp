#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cathom/corpus.hpp"
#include "cathom/fincat.hpp"

using namespace cathom;

namespace {

RawCategory interval_raw() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}};
  raw.identities = {{"x", "id_x"}, {"y", "id_y"}};
  return raw;
}

}  // namespace

TEST_CASE("validate_category completes identity composites") {
  FinCatPtr c = validate_category(interval_raw());
  CHECK(c->num_objects() == 2);
  CHECK(c->num_morphisms() == 3);
  int f = c->morphism_index("f");
  int idx = c->identity[c->object_index("x")];
  int idy = c->identity[c->object_index("y")];
  CHECK(c->compose(f, idx) == f);
  CHECK(c->compose(idy, f) == f);
  CHECK(c->dom[f] == c->object_index("x"));
  CHECK(c->cod[f] == c->object_index("y"));
}

TEST_CASE("validate_category rejects a broken associativity table") {
  RawCategory raw;
  raw.objects = {"m"};
  raw.morphisms = {{"id_m", "m", "m"}, {"s", "m", "m"}, {"t", "m", "m"}};
  raw.identities = {{"m", "id_m"}};
  raw.compose = {{"s", "s", "t"}, {"t", "s", "id_m"}, {"s", "t", "t"}, {"t", "t", "s"}};
  CHECK_THROWS_AS(validate_category(raw), CatError);
}

TEST_CASE("validate_category rejects a missing composite") {
  RawCategory raw;
  raw.objects = {"a", "b", "c"};
  raw.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"},
                   {"u", "a", "b"},    {"v", "b", "c"}};
  raw.identities = {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}};
  CHECK_THROWS_AS(validate_category(raw), CatError);
}

TEST_CASE("enumeration order is canonical by sorted ids") {
  FinCatPtr c = validate_category(interval_raw());
  CHECK(c->obj_names == std::vector<std::string>{"x", "y"});
  CHECK(c->mor_names == std::vector<std::string>{"f", "id_x", "id_y"});
}

TEST_CASE("hom sets") {
  FinCatPtr c = corpus::parallel_pair();
  int x = c->object_index("x"), y = c->object_index("y");
  CHECK(c->hom(x, y).size() == 2);
  CHECK(c->hom(y, x).empty());
  CHECK(c->hom(x, x).size() == 1);
}

TEST_CASE("product category has componentwise structure") {
  FinCatPtr c = corpus::interval();
  ProductCat cc = product(c, c);
  CHECK(cc.cat->num_objects() == 4);
  CHECK(cc.cat->num_morphisms() == 9);
  int f = c->morphism_index("f");
  int both = cc.mor_of(f, f);
  CHECK(cc.mor_pair_a[both] == f);
  CHECK(cc.mor_pair_b[both] == f);
  check_functor(cc.pr1);
  check_functor(cc.pr2);
  Functor d = diagonal_functor(c, cc);
  check_functor(d);
  CHECK(compose_functors(cc.pr1, d) == identity_functor(c));
  CHECK(compose_functors(cc.pr2, d) == identity_functor(c));
}

TEST_CASE("subcategory closure and realization") {
  FinCatPtr c = corpus::interval();
  Subcategory s = subcategory_generated(c, {c->morphism_index("f")});
  CHECK(s.obj_count() == 2);
  CHECK(s.mor_count() == 3);
  auto [r, incl] = realize_subcategory(s);
  CHECK(r->num_morphisms() == 3);
  check_functor(incl);

  Subcategory just_x = full_subcategory(c, {c->object_index("x")});
  CHECK(just_x.obj_count() == 1);
  CHECK(just_x.mor_count() == 1);
  CHECK(check_subcategory(just_x));
}

TEST_CASE("connected components") {
  CHECK(is_connected(corpus::parallel_pair()));
  CHECK_FALSE(is_connected(corpus::discrete(3)));
  CHECK(connected_components(corpus::discrete(3)).size() == 3);
  CHECK(connected_components(corpus::zigzag(4)).size() == 1);
}

TEST_CASE("functor enumeration is deterministic and complete") {
  FinCatPtr s1 = corpus::parallel_pair();
  std::vector<Functor> fs = enumerate_functors(s1, s1);
  CHECK(fs.size() == 6);
  for (const Functor& f : fs) CHECK(is_functor(f));
  std::vector<Functor> again = enumerate_functors(s1, s1);
  CHECK(fs.size() == again.size());
  for (size_t i = 0; i < fs.size(); ++i) CHECK(fs[i] == again[i]);
  CHECK_THROWS_AS(enumerate_functors(product(s1, s1).cat, product(s1, s1).cat, 10),
                  BudgetExceeded);
}

TEST_CASE("pullback of parallel functors") {
  FinCatPtr c = corpus::interval();
  ProductCat cc = product(c, c);
  PullbackCat pb = pullback(cc.pr1, cc.pr2);
  check_functor(pb.pr_a);
  check_functor(pb.pr_b);
  CHECK(compose_functors(cc.pr1, pb.pr_a).obj_map == compose_functors(cc.pr2, pb.pr_b).obj_map);
  CHECK(compose_functors(cc.pr1, pb.pr_a).mor_map == compose_functors(cc.pr2, pb.pr_b).mor_map);
}

TEST_CASE("generator morphisms of the square") {
  FinCatPtr c = corpus::interval();
  ProductCat cc = product(c, c);
  std::vector<int> gens = generator_morphisms(*cc.cat);
  // (f,id) and (id,f) on each side; the diagonal (f,f) is their composite
  CHECK(gens.size() == 4);
}
