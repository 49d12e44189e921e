#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cathom/corpus.hpp"
#include "cathom/paths.hpp"

using namespace cathom;

namespace {

Path lit(const FinCatPtr& c, const std::vector<std::string>& l) { return path_from_literal(c, l); }

}  // namespace

TEST_CASE("literal round trip and type checking") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path p = lit(s1, {"x", "f", "y", "g", "x"});
  check_path(p);
  CHECK(p.length() == 2);
  CHECK(p.start() == s1->object_index("x"));
  CHECK(p.end() == s1->object_index("x"));
  CHECK_THROWS_AS(lit(s1, {"y", "f", "x"}), CatError);
}

TEST_CASE("normalization pads odd length and removes identity bounces") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path odd = lit(s1, {"x", "f", "y"});
  Path n = normalize_path(odd);
  CHECK(n.length() % 2 == 0);
  CHECK(n.start() == odd.start());
  CHECK(n.end() == odd.end());
  CHECK(normalize_path(n) == n);

  Path bounce = lit(s1, {"x", "id_x", "x", "id_x", "x", "f", "y", "id_y", "y"});
  Path r = normalize_path(bounce);
  CHECK(r == normalize_path(lit(s1, {"x", "f", "y"})));
}

TEST_CASE("concat and reverse") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path p = lit(s1, {"x", "f", "y", "g", "x"});
  Path c0 = Path::constant(s1, p.end());
  CHECK(normalize_path(concat_paths(p, c0)) == normalize_path(p));
  Path back = concat_paths(p, reverse_path(p));
  CHECK(back.start() == p.start());
  CHECK(back.end() == p.start());
  CHECK_THROWS_AS(concat_paths(p, lit(s1, {"y", "g", "x"})), CatError);
}

TEST_CASE("reparams are monotone step maps with even collapsed runs") {
  Reparam id = Reparam::identity(4);
  CHECK(valid_reparam(id));
  Reparam u;
  u.map = {0, 1, 1, 1, 2};
  CHECK(valid_reparam(u));
  Reparam bad;
  bad.map = {0, 0, 1};  // collapses an odd run
  CHECK_FALSE(valid_reparam(bad));
  CHECK(compose_reparams(u, Reparam::identity(4)) == u);
}

TEST_CASE("the localized morphism in PS1 exists while the strict one does not") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path i = lit(s1, {"x", "f", "y", "f", "x", "f", "y", "g", "x"});
  Path j = lit(s1, {"x", "f", "y", "g", "x"});

  FindResult loc = find_path_morphism(i, j, 3);
  REQUIRE(loc.verdict == SearchVerdict::Found);
  REQUIRE(loc.morphism.has_value());
  const PathSpan& s = *loc.morphism;
  CHECK(s.pad_total() == 0);
  int idx = s1->identity[s1->object_index("x")];
  int idy = s1->identity[s1->object_index("y")];
  int f = s1->morphism_index("f");
  CHECK(s.leg.components == std::vector<int>{idx, idy, f, idy, idx});
  CHECK(s.leg.reparam.map == std::vector<int>{0, 1, 1, 1, 2});

  FindResult strict = find_path_morphism_strict(i, j);
  CHECK(strict.verdict == SearchVerdict::AbsentExhaustive);
}

TEST_CASE("identity to identity") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path p = lit(s1, {"x", "f", "y", "g", "x"});
  FindResult r = find_path_morphism(p, p, 2);
  REQUIRE(r.verdict == SearchVerdict::Found);
  CHECK(r.morphism->pad_total() == 0);
  CHECK(r.morphism->leg == identity_path_morphism(p));
}

TEST_CASE("span equality absorbs padding and reduce_span removes it") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path p = lit(s1, {"x", "f", "y", "g", "x"});
  PathSpan id = identity_span(p);

  PathSpan padded;
  padded.source = p;
  padded.target = p;
  padded.pad_counts = {1, 0, 0};
  padded.leg.from = padded.apex();
  padded.leg.to = p;
  padded.leg.reparam.map = {0, 0, 0, 1, 2};
  int idx = s1->identity[p.objects[0]];
  padded.leg.components = {idx, idx, idx,
                           s1->identity[p.objects[1]], s1->identity[p.objects[2]]};
  REQUIRE(check_span(padded));
  CHECK(spans_equal(padded, id, 2));
  PathSpan red = reduce_span(padded);
  CHECK(red.pad_total() == 0);
  CHECK(red.leg == id.leg);

  // a genuinely different class: identity vs the class through the other loop
  Path q = lit(s1, {"x", "f", "y", "f", "x"});
  FindResult other = find_path_morphism(q, p, 3);
  if (other.verdict == SearchVerdict::Found) CHECK_FALSE(spans_equal(*other.morphism, id, 3));
}

TEST_CASE("span composition with identities and associativity sample") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path i = lit(s1, {"x", "f", "y", "f", "x", "f", "y", "g", "x"});
  Path j = lit(s1, {"x", "f", "y", "g", "x"});
  PathSpan m = *find_path_morphism(i, j, 3).morphism;
  CHECK(spans_equal(compose_spans(identity_span(j), m), m, 3));
  CHECK(spans_equal(compose_spans(m, identity_span(i)), m, 3));
}

TEST_CASE("hom_span_classes on constant paths") {
  FinCatPtr s1 = corpus::parallel_pair();
  Path cx = Path::constant(s1, s1->object_index("x"));
  std::vector<PathSpan> cls = hom_span_classes(cx, cx, 2);
  CHECK(cls.size() == 1);
  for (const PathSpan& s : cls) CHECK(check_span(s));
}

TEST_CASE("reduced path enumeration counts") {
  CHECK(enumerate_reduced_paths(corpus::interval(), 2).size() == 5);
  CHECK(enumerate_reduced_paths(corpus::parallel_pair(), 2).size() == 10);
  for (const Path& p : enumerate_reduced_paths(corpus::parallel_pair(), 4)) {
    check_path(p);
    CHECK(p.length() % 2 == 0);
    CHECK(is_reduced(p));
  }
}
