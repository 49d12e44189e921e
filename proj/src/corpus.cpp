#include "cathom/corpus.hpp"

namespace cathom {
namespace corpus {

FinCatPtr terminal() {
  RawCategory raw;
  raw.objects = {"pt"};
  raw.morphisms = {{"id_pt", "pt", "pt"}};
  raw.identities = {{"pt", "id_pt"}};
  return validate_category(raw);
}

FinCatPtr interval() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}};
  raw.identities = {{"x", "id_x"}, {"y", "id_y"}};
  return validate_category(raw);
}

FinCatPtr parallel_pair() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}, {"g", "x", "y"}};
  raw.identities = {{"x", "id_x"}, {"y", "id_y"}};
  return validate_category(raw);
}

FinCatPtr zigzag(int m) {
  RawCategory raw;
  auto obj = [](int i) { return "o" + std::to_string(i); };
  for (int i = 0; i <= m; ++i) {
    raw.objects.push_back(obj(i));
    raw.identities[obj(i)] = "id_" + obj(i);
    raw.morphisms.push_back({"id_" + obj(i), obj(i), obj(i)});
  }
  for (int i = 0; i < m; ++i) {
    std::string name = "a" + std::to_string(i);
    if (i % 2 == 0)
      raw.morphisms.push_back({name, obj(i), obj(i + 1)});
    else
      raw.morphisms.push_back({name, obj(i + 1), obj(i)});
  }
  return validate_category(raw);
}

FinCatPtr discrete(int n) {
  RawCategory raw;
  for (int i = 0; i < n; ++i) {
    std::string o = "o" + std::to_string(i);
    raw.objects.push_back(o);
    raw.morphisms.push_back({"id_" + o, o, o});
    raw.identities[o] = "id_" + o;
  }
  return validate_category(raw);
}

}  // namespace corpus
}  // namespace cathom
