#include "cathom/io.hpp"

#include <filesystem>
#include <fstream>

namespace cathom {

using nlohmann::json;

RawCategory raw_from_json(const json& j) {
  RawCategory raw;
  if (!j.is_object()) throw CatError(CatErrorKind::BadInput, "category file: not an object");
  for (const auto& o : j.at("objects")) raw.objects.push_back(o.get<std::string>());
  for (const auto& m : j.at("morphisms"))
    raw.morphisms.push_back({m.at("id").get<std::string>(), m.at("dom").get<std::string>(),
                             m.at("cod").get<std::string>()});
  for (const auto& [k, v] : j.at("identities").items())
    raw.identities[k] = v.get<std::string>();
  if (j.contains("compose"))
    for (const auto& t : j.at("compose")) {
      if (t.size() != 3) throw CatError(CatErrorKind::BadInput, "compose entry is not a triple");
      raw.compose.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                             t[2].get<std::string>()});
    }
  return raw;
}

json raw_to_json(const RawCategory& raw) {
  json j;
  j["objects"] = raw.objects;
  j["morphisms"] = json::array();
  for (const auto& m : raw.morphisms)
    j["morphisms"].push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["identities"] = json::object();
  for (const auto& [k, v] : raw.identities) j["identities"][k] = v;
  j["compose"] = json::array();
  for (const auto& t : raw.compose) j["compose"].push_back({t[0], t[1], t[2]});
  return j;
}

FinCatPtr load_category(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatError(CatErrorKind::BadInput, "cannot open '" + path + "'");
  json j;
  in >> j;
  return validate_category(raw_from_json(j));
}

json category_to_json(const FinCat& c) {
  RawCategory raw;
  raw.objects = c.obj_names;
  for (int m = 0; m < c.num_morphisms(); ++m)
    raw.morphisms.push_back({c.mor_names[m], c.obj_names[c.dom[m]], c.obj_names[c.cod[m]]});
  for (int o = 0; o < c.num_objects(); ++o)
    raw.identities[c.obj_names[o]] = c.mor_names[c.identity[o]];
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g) {
      if (!c.composable(g, f)) continue;
      if (c.is_identity(g) || c.is_identity(f)) continue;  // completed by the loader
      raw.compose.push_back({c.mor_names[g], c.mor_names[f], c.mor_names[c.compose(g, f)]});
    }
  return raw_to_json(raw);
}

Functor functor_from_json(const json& j, const FinCatPtr& src, const FinCatPtr& tgt) {
  Functor f{src, tgt, std::vector<int>(src->num_objects(), -1),
            std::vector<int>(src->num_morphisms(), -1)};
  for (const auto& [k, v] : j.at("obj_map").items())
    f.obj_map[src->object_index(k)] = tgt->object_index(v.get<std::string>());
  for (const auto& [k, v] : j.at("mor_map").items())
    f.mor_map[src->morphism_index(k)] = tgt->morphism_index(v.get<std::string>());
  for (int v : f.obj_map)
    if (v < 0) throw CatError(CatErrorKind::BadInput, "functor file: incomplete obj_map");
  for (int v : f.mor_map)
    if (v < 0) throw CatError(CatErrorKind::BadInput, "functor file: incomplete mor_map");
  check_functor(f);
  return f;
}

Functor load_functor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatError(CatErrorKind::BadInput, "cannot open '" + path + "'");
  json j;
  in >> j;
  auto dir = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (dir / fp).string();
  };
  FinCatPtr src = load_category(resolve(j.at("source").get<std::string>()));
  FinCatPtr tgt = load_category(resolve(j.at("target").get<std::string>()));
  return functor_from_json(j, src, tgt);
}

json functor_to_json(const Functor& f) {
  json j;
  j["obj_map"] = json::object();
  for (int o = 0; o < f.source->num_objects(); ++o)
    j["obj_map"][f.source->obj_names[o]] = f.target->obj_names[f.obj_map[o]];
  j["mor_map"] = json::object();
  for (int m = 0; m < f.source->num_morphisms(); ++m)
    j["mor_map"][f.source->mor_names[m]] = f.target->mor_names[f.mor_map[m]];
  return j;
}

}  // namespace cathom
