#pragma once

#include "json.hpp"

#include "cathom/covers.hpp"
#include "cathom/fincat.hpp"
#include "cathom/homotopy.hpp"
#include "cathom/pathcat.hpp"

namespace cathom {

enum class Mode { Weak, Strong, Strict };

std::string mode_name(Mode m);

struct InvariantResult {
  std::string name;
  Mode mode = Mode::Weak;
  enum Kind { Value, Infinite, Unknown } kind = Unknown;
  int value = -1;
  nlohmann::json certificate;  // cover pieces + per-piece witnesses
  bool budget_exhausted = false;
  long long lower = 0;  // when Unknown

  nlohmann::json to_json() const;
};

struct Budgets {
  long long functor_cap = 100000;
  long long piece_budget = 100000;
  long long cover_budget = 1000;
  int max_len = 4;
  int zigzag = 3;
};

// Serialized pieces inside certificates: {"objects": [...], "morphisms": [...]}.
nlohmann::json piece_to_json(const Subcategory& s);
Subcategory piece_from_json(const FinCatPtr& c, const nlohmann::json& j);

// Re-checks a cover certificate without redoing the search: pieces form a
// geometric cover and the count matches the claimed value.
bool revalidate_cover_certificate(const FinCatPtr& c, const nlohmann::json& certificate,
                                  int value);

// Categorical LS-category. Disconnected inputs are computed per component;
// the aggregate is (sum of component values) + components - 1.
InvariantResult ccat(const FinCatPtr& c, Mode mode, const Budgets& b = {});

// Homotopic distance between parallel functors.
InvariantResult cdist(const Functor& f, const Functor& g, Mode mode, const Budgets& b = {});

// Categorical topological complexity via covers of C×C on which the two
// projections are homotopic.
InvariantResult ctc(const FinCatPtr& c, Mode mode, const Budgets& b = {});

// Sectional category of a functor: pieces cover the target, sections land in
// the source; Strict demands on-the-nose sections, Weak/Strong homotopic ones.
InvariantResult secat(const Functor& p, Mode mode, const Budgets& b = {});

// Švarc genus: secat with homotopic sections.
InvariantResult svarc_genus(const Functor& p, Mode mode, const Budgets& b = {});

struct RelationReport {
  struct Item {
    std::string relation;
    std::string lhs_name, rhs_name;
    nlohmann::json lhs, rhs;
    bool pass = false;
    std::string note;
  };
  std::vector<Item> items;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

// Evaluates the stated order relations and dual-route equalities on one
// category, with sampled functors where a relation needs them.
RelationReport verify_relations(const FinCatPtr& c, const Budgets& b = {});

// Exhaustive strict-section search for one piece: functors s with p∘s = incl.
std::optional<Functor> find_strict_section(const Functor& p, const Subcategory& piece,
                                           const FinCatPtr& realized, const Functor& inclusion);

}  // namespace cathom
