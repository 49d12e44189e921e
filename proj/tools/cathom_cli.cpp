#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#ifdef CATHOM_HAVE_OPENMP
#include <omp.h>
#endif

#include "cathom/corpus.hpp"
#include "cathom/covers.hpp"
#include "cathom/fibrations.hpp"
#include "cathom/invariants.hpp"
#include "cathom/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cathom;

namespace {

struct Options {
  std::string mode = "weak";
  int max_len = 4;
  int zigzag = 3;
  long long functor_cap = 100000;
  long long cover_cap = 1000;
  std::string out;
  unsigned long long seed = 1;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "weak|strong|strict")
      ->check(CLI::IsMember({"weak", "strong", "strict"}));
  cmd->add_option("--max-len", o.max_len, "path truncation length L")->check(CLI::PositiveNumber);
  cmd->add_option("--zigzag-depth", o.zigzag, "localization padding depth Z")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--functor-cap", o.functor_cap)->check(CLI::PositiveNumber);
  cmd->add_option("--cover-cap", o.cover_cap)->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--seed", o.seed, "battery sampling seed");
}

Mode parse_mode(const std::string& m) {
  if (m == "strong") return Mode::Strong;
  if (m == "strict") return Mode::Strict;
  return Mode::Weak;
}

Budgets budgets_of(const Options& o) {
  Budgets b;
  b.functor_cap = o.functor_cap;
  b.piece_budget = o.functor_cap;
  b.cover_budget = o.cover_cap;
  b.max_len = o.max_len;
  b.zigzag = o.zigzag;
  return b;
}

void emit(const Options& o, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw CatError(CatErrorKind::BadInput, "cannot open output file " + o.out);
    f << text;
  }
}

json functor_names_json(const Functor& f) {
  json obj = json::object(), mor = json::object();
  for (int o = 0; o < f.source->num_objects(); ++o)
    obj[f.source->obj_names[o]] = f.target->obj_names[f.obj_map[o]];
  for (int m = 0; m < f.source->num_morphisms(); ++m)
    mor[f.source->mor_names[m]] = f.target->mor_names[f.mor_map[m]];
  return json{{"obj_map", obj}, {"mor_map", mor}};
}

json strong_homotopy_json(const StrongHomotopy& h) {
  json stages = json::array(), links = json::array();
  for (const Functor& s : h.stages) stages.push_back(functor_names_json(s));
  for (size_t i = 0; i < h.links.size(); ++i) {
    json comps = json::object();
    for (size_t o = 0; o < h.links[i].components.size(); ++o)
      comps[h.links[i].from.source->obj_names[o]] =
          h.links[i].from.target->mor_names[h.links[i].components[o]];
    links.push_back(json{{"direction", i % 2 == 0 ? "forward" : "backward"},
                         {"components", comps}});
  }
  return json{{"stages", stages}, {"links", links}};
}

json weak_homotopy_json(const WeakHomotopy& h) {
  json paths = json::object(), spans = json::object();
  const FinCat& c = *h.from.source;
  for (int o = 0; o < c.num_objects(); ++o) paths[c.obj_names[o]] = h.obj_paths[o].literal();
  for (int m = 0; m < c.num_morphisms(); ++m) spans[c.mor_names[m]] = h.mor_spans[m].key();
  return json{{"object_paths", paths}, {"morphism_spans", spans}};
}

// Parallel functors must share category objects, so the second file is bound
// to the categories of the first when the files describe equal categories.
std::pair<Functor, Functor> load_functor_pair(const std::string& fp, const std::string& gp) {
  Functor f = load_functor(fp);
  std::ifstream in(gp);
  if (!in) throw CatError(CatErrorKind::BadInput, "cannot open '" + gp + "'");
  json j = json::parse(in);
  Functor g = load_functor(gp);
  if (category_to_json(*g.source) != category_to_json(*f.source) ||
      category_to_json(*g.target) != category_to_json(*f.target))
    throw CatError(CatErrorKind::BadInput, "the two functors are not parallel");
  return {f, functor_from_json(j, f.source, f.target)};
}

// Resolves the "source"/"target" category path inside a functor file.
std::string functor_part_path(const std::string& functor_file, const std::string& key) {
  std::ifstream f(functor_file);
  if (!f) throw CatError(CatErrorKind::BadInput, "cannot read " + functor_file);
  json j = json::parse(f);
  return (fs::path(functor_file).parent_path() / j.at(key).get<std::string>()).string();
}

int run_invariant(const Options& o, const std::string& name, const std::string& cat_file,
                  const InvariantResult& r) {
  json out = r.to_json();
  out["invariant"] = name;
  out["category_file"] = fs::absolute(cat_file).string();
  emit(o, out);
  return r.kind == InvariantResult::Unknown && r.budget_exhausted ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef CATHOM_HAVE_OPENMP
  if (const char* t = std::getenv("CATHOM_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
  CLI::App app{"homotopy invariants of finite categories"};
  app.require_subcommand(1);
  Options o;
  std::string cat_path, f_path, g_path, p_path, cover_path, battery_path;

  CLI::App* c_validate = app.add_subcommand("validate", "check the category laws");
  c_validate->add_option("category", cat_path)->required();
  add_common(c_validate, o);

  CLI::App* c_homotopic = app.add_subcommand("homotopic", "decide whether two functors are homotopic");
  c_homotopic->add_option("F", f_path)->required();
  c_homotopic->add_option("G", g_path)->required();
  add_common(c_homotopic, o);

  CLI::App* c_ccat = app.add_subcommand("ccat", "categorical LS-category");
  c_ccat->add_option("category", cat_path)->required();
  add_common(c_ccat, o);

  CLI::App* c_ctc = app.add_subcommand("ctc", "categorical topological complexity");
  c_ctc->add_option("category", cat_path)->required();
  add_common(c_ctc, o);

  CLI::App* c_distance = app.add_subcommand("distance", "homotopic distance between two functors");
  c_distance->add_option("F", f_path)->required();
  c_distance->add_option("G", g_path)->required();
  add_common(c_distance, o);

  CLI::App* c_secat = app.add_subcommand("secat", "sectional category of a functor");
  c_secat->add_option("P", p_path)->required();
  add_common(c_secat, o);

  CLI::App* c_sg = app.add_subcommand("sg", "Svarc genus of a functor");
  c_sg->add_option("P", p_path)->required();
  add_common(c_sg, o);

  CLI::App* c_cover = app.add_subcommand("cover-check", "revalidate an emitted cover certificate");
  c_cover->add_option("cover", cover_path)->required();
  add_common(c_cover, o);

  CLI::App* c_pathcat = app.add_subcommand("pathcat", "materialize the truncated path category");
  c_pathcat->add_option("category", cat_path)->required();
  add_common(c_pathcat, o);

  CLI::App* c_fib = app.add_subcommand("fibcheck", "strong/weak lifting battery for a functor");
  c_fib->add_option("P", p_path)->required();
  c_fib->add_option("--battery", battery_path, "battery spec JSON");
  add_common(c_fib, o);

  CLI::App* c_replace = app.add_subcommand("replace", "fibrant replacement of a functor");
  c_replace->add_option("F", f_path)->required();
  add_common(c_replace, o);

  CLI::App* c_relations = app.add_subcommand("relations", "verify the order relations on one category");
  c_relations->add_option("category", cat_path)->required();
  add_common(c_relations, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) {
      FinCatPtr c = load_category(cat_path);
      emit(o, json{{"valid", true},
                   {"objects", c->num_objects()},
                   {"morphisms", c->num_morphisms()},
                   {"category", category_to_json(*c)}});
      return 0;
    }
    if (c_homotopic->parsed()) {
      auto [f, g] = load_functor_pair(f_path, g_path);
      json out{{"mode", o.mode}};
      if (parse_mode(o.mode) == Mode::Weak) {
        std::optional<WeakHomotopy> h = weak_homotopic(f, g, o.functor_cap);
        out["homotopic"] = h.has_value();
        if (h) out["certificate"] = weak_homotopy_json(*h);
      } else {
        std::optional<StrongHomotopy> h = strong_homotopic(f, g, o.functor_cap);
        out["homotopic"] = h.has_value();
        if (h) out["certificate"] = strong_homotopy_json(*h);
      }
      emit(o, out);
      return 0;
    }
    if (c_ccat->parsed())
      return run_invariant(o, "ccat", cat_path, ccat(load_category(cat_path), parse_mode(o.mode), budgets_of(o)));
    if (c_ctc->parsed())
      return run_invariant(o, "ctc", cat_path, ctc(load_category(cat_path), parse_mode(o.mode), budgets_of(o)));
    if (c_distance->parsed())
      return run_invariant(o, "cdist", functor_part_path(f_path, "source"),
                           [&] {
                             auto [f, g] = load_functor_pair(f_path, g_path);
                             return cdist(f, g, parse_mode(o.mode), budgets_of(o));
                           }());
    if (c_secat->parsed())
      return run_invariant(o, "secat", functor_part_path(p_path, "target"), secat(load_functor(p_path), parse_mode(o.mode), budgets_of(o)));
    if (c_sg->parsed())
      return run_invariant(o, "svarc_genus", functor_part_path(p_path, "target"),
                           svarc_genus(load_functor(p_path), parse_mode(o.mode), budgets_of(o)));
    if (c_cover->parsed()) {
      std::ifstream f(cover_path);
      if (!f) throw CatError(CatErrorKind::BadInput, "cannot read " + cover_path);
      json j = json::parse(f);
      std::string rel = j.at("category_file").get<std::string>();
      fs::path cat_file = fs::path(rel).is_absolute()
                              ? fs::path(rel)
                              : fs::path(cover_path).parent_path() / rel;
      FinCatPtr c = load_category(cat_file.string());
      std::string invariant = j.value("invariant", "ccat");
      ProductCat cc;
      FinCatPtr space = c;
      if (invariant == "ctc") {
        cc = product(c, c);
        space = cc.cat;
      }
      bool ok = j.contains("certificate") && j.at("value").is_number();
      if (ok) {
        const json& cert = j.at("certificate");
        int value = j.at("value").get<int>();
        if (cert.contains("components")) {
          // disconnected aggregate: each component cover revalidates on its
          // realized component and the values recombine
          std::vector<std::vector<int>> comps = connected_components(space);
          ok = cert.at("components").size() == comps.size();
          int total = static_cast<int>(comps.size()) - 1;
          for (size_t i = 0; ok && i < comps.size(); ++i) {
            const json& sub = cert.at("components")[i];
            FinCatPtr part = realize_subcategory(full_subcategory(space, comps[i])).first;
            ok = sub.at("value").is_number() &&
                 revalidate_cover_certificate(part, sub.at("certificate"),
                                              sub.at("value").get<int>());
            if (ok) total += sub.at("value").get<int>();
          }
          ok = ok && total == value;
        } else {
          ok = revalidate_cover_certificate(space, cert, value);
        }
      }
      emit(o, json{{"valid", ok}});
      return ok ? 0 : 1;
    }
    if (c_pathcat->parsed()) {
      FinCatPtr c = load_category(cat_path);
      TruncatedPathCat pc = truncated_path_category(c, o.max_len, o.zigzag, o.functor_cap);
      json paths = json::array();
      for (const Path& p : pc.obj_paths) paths.push_back(p.literal());
      emit(o, json{{"max_len", o.max_len},
                   {"zigzag_depth", o.zigzag},
                   {"objects", pc.cat->num_objects()},
                   {"morphisms", pc.cat->num_morphisms()},
                   {"object_paths", paths}});
      return 0;
    }
    if (c_fib->parsed()) {
      Functor p = load_functor(p_path);
      BatterySpec spec;
      spec.seed = o.seed;
      spec.functor_cap = o.functor_cap;
      spec.zigzag = o.zigzag;
      if (!battery_path.empty()) {
        std::ifstream f(battery_path);
        if (!f) throw CatError(CatErrorKind::BadInput, "cannot read " + battery_path);
        json j = json::parse(f);
        spec.max_homotopy_length = j.value("max_homotopy_length", spec.max_homotopy_length);
        spec.max_problems = j.value("max_problems", spec.max_problems);
        spec.seed = j.value("seed", spec.seed);
        fs::path dir = fs::path(battery_path).parent_path();
        for (const auto& rel : j.value("test_categories", std::vector<std::string>{}))
          spec.test_categories.push_back(load_category((dir / rel).string()));
      }
      FibrationReport rep = check_fibration(p, spec);
      emit(o, json{{"cells", rep.cells},
                   {"strong_lifted", rep.strong_lifted},
                   {"weak_lifted", rep.weak_lifted},
                   {"all_lifted_strong", rep.all_lifted_strong},
                   {"all_lifted_weak", rep.all_lifted_weak},
                   {"verdicts_agree", rep.verdicts_agree},
                   {"details", rep.details}});
      return 0;
    }
    if (c_replace->parsed()) {
      Functor f = load_functor(f_path);
      FibrantReplacement r = fibrant_replacement(f, o.max_len, o.zigzag, o.functor_cap);
      bool eq = compose_functors(r.f2, r.f1) == f &&
                compose_functors(r.g, r.f1) == identity_functor(f.source);
      emit(o, json{{"max_len", o.max_len},
                   {"ef_objects", r.ef.cat->num_objects()},
                   {"ef_morphisms", r.ef.cat->num_morphisms()},
                   {"equations_hold", eq},
                   {"contraction_valid", check_weak_homotopy(r.contraction, o.zigzag)},
                   {"f1", functor_names_json(r.f1)},
                   {"f2", functor_names_json(r.f2)},
                   {"g", functor_names_json(r.g)}});
      return 0;
    }
    if (c_relations->parsed()) {
      RelationReport rep = verify_relations(load_category(cat_path), budgets_of(o));
      emit(o, rep.to_json());
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what();
    if (e.lower >= 0) std::cerr << " (established lower bound " << e.lower << ")";
    std::cerr << "\n";
    return 2;
  } catch (const CatError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
