#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "cathom/corpus.hpp"
#include "cathom/invariants.hpp"
#include "cathom/io.hpp"

using namespace cathom;
using nlohmann::json;

namespace {

const char* kDataDir = CATHOM_DATA_DIR;

std::string data(const std::string& name) { return std::string(kDataDir) + "/" + name; }

}  // namespace

TEST_CASE("category files load and serialize canonically") {
  for (const char* name : {"terminal.json", "interval.json", "parallel_pair.json",
                           "zigzag2.json", "zigzag4.json", "discrete2.json", "discrete3.json",
                           "square.json"}) {
    FinCatPtr c = load_category(data(name));
    json j = category_to_json(*c);
    FinCatPtr back = validate_category(raw_from_json(j));
    CHECK(category_to_json(*back) == j);
  }
}

TEST_CASE("a broken composition table is rejected on load") {
  CHECK_THROWS_AS(load_category(data("broken_assoc.json")), CatError);
  CHECK_THROWS_AS(load_category(data("no_such_file.json")), CatError);
}

TEST_CASE("corpus categories match their data files") {
  CHECK(category_to_json(*load_category(data("terminal.json"))) ==
        category_to_json(*corpus::terminal()));
  CHECK(category_to_json(*load_category(data("interval.json"))) ==
        category_to_json(*corpus::interval()));
  CHECK(category_to_json(*load_category(data("parallel_pair.json"))) ==
        category_to_json(*corpus::parallel_pair()));
  CHECK(category_to_json(*load_category(data("zigzag4.json"))) ==
        category_to_json(*corpus::zigzag(4)));
  CHECK(category_to_json(*load_category(data("discrete3.json"))) ==
        category_to_json(*corpus::discrete(3)));
}

TEST_CASE("functor files load and round trip") {
  for (const char* name :
       {"functors/interval_id.json", "functors/interval_const_x.json",
        "functors/circle_id.json", "functors/circle_swap.json",
        "functors/square_pr1.json", "functors/point_in_interval.json"}) {
    Functor f = load_functor(data(name));
    check_functor(f);
    json j = functor_to_json(f);
    Functor back = functor_from_json(j, f.source, f.target);
    CHECK(back == f);
  }
}

TEST_CASE("invariant results serialize with certificate payloads") {
  InvariantResult r = ccat(corpus::parallel_pair(), Mode::Weak);
  json j = r.to_json();
  CHECK(j["invariant"] == "ccat");
  CHECK(j["value"] == 1);
  CHECK(j["mode"] == "weak");
  CHECK(j.contains("certificate"));
  REQUIRE(j["certificate"].contains("pieces"));
  CHECK(j["certificate"]["pieces"].size() == 2);

  // pieces re-parse into checkable subcategories
  FinCatPtr s1 = corpus::parallel_pair();
  for (const json& pj : j["certificate"]["pieces"]) {
    Subcategory s = piece_from_json(s1, pj);
    CHECK(check_subcategory(s));
  }
}

TEST_CASE("serialization is byte-stable across runs") {
  json a = ccat(corpus::parallel_pair(), Mode::Weak).to_json();
  json b = ccat(corpus::parallel_pair(), Mode::Weak).to_json();
  CHECK(a.dump(2) == b.dump(2));
}

TEST_CASE("unknown results carry the lower bound") {
  json j = ctc(corpus::parallel_pair(), Mode::Weak).to_json();
  CHECK(j["budget_exhausted"] == true);
  REQUIRE(j["value"].is_object());
  CHECK(j["value"]["unknown_at_least"].get<long long>() >= 1);
}
