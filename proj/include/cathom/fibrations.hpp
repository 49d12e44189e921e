#pragma once

#include <functional>
#include <optional>

#include "json.hpp"

#include "cathom/homotopy.hpp"
#include "cathom/pathcat.hpp"

namespace cathom {

// A strict path-valued functor C -> PB with direct morphism components; the
// floor of a path-fibration lifting problem.
struct PathFunctor {
  FinCatPtr index, base;
  std::vector<Path> obj_paths;      // per index object
  std::vector<PathMorphism> mors;   // per index morphism, identity reparam
};

bool check_path_functor(const PathFunctor& f);

// A path-of-paths valued homotopy C -> P(PB): stage path functors joined by
// per-object connector spans (direction alternating with parity).
struct PathHomotopy {
  FinCatPtr index, base;
  std::vector<PathFunctor> stages;
  std::vector<std::vector<PathSpan>> links;  // links[i][c]
  bool length_preserving = false;
};

// Lifting problem for the endpoint fibration π : PB -> B×B.
struct PiLiftProblem {
  FinCatPtr base;    // B
  ProductCat bb;     // B×B
  StrongHomotopy h;  // stages C -> B×B
  PathFunctor floor;  // C -> PB, endpoints matching stage 0
};

bool check_pi_lift_problem(const PiLiftProblem& p);

// The staircase lift: stage i prepends the reversed first-endpoint walk and
// appends the second-endpoint walk to the floor path.
PathHomotopy path_fibration_lift(const PiLiftProblem& problem);

// Independent validator: start face, per-stage endpoint projection, link
// projections, and naturality of links against stage morphisms at depth Z.
bool validate_pi_lift(const PiLiftProblem& problem, const PathHomotopy& lift, int zigzag = 3);

struct FibrantReplacement {
  Functor f;  // the factored functor C -> D
  int max_len = 4, zigzag = 3;
  PathPullback ef;           // E_F
  Functor f1;                // C -> E_F, weak homotopy equivalence
  Functor f2;                // E_F -> D, length-preserving weak fibration
  Functor g;                 // E_F -> C with G∘F1 = id
  WeakHomotopy contraction;  // F1∘G ≃_w id
};

// Lifts through F₂ exist for floors whose paths leave headroom for the base
// homotopy inside the truncation; others raise BudgetExceeded in fibrant_lift.
FibrantReplacement fibrant_replacement(const Functor& f, int max_len, int zigzag = 3,
                                       long long cap = 100000);

// Lifting problem through an ordinary functor p : E -> B between materialized
// categories: base homotopy plus a strict floor.
struct StrongLiftProblem {
  StrongHomotopy h;  // C -> B
  Functor floor;     // C -> E with p∘floor = h.stages[0]
};

bool check_lift_problem(const Functor& p, const StrongLiftProblem& problem);
bool validate_lift(const Functor& p, const StrongLiftProblem& problem,
                   const StrongHomotopy& lift);

// Stagewise lift through F₂ of a fibrant replacement.
StrongHomotopy fibrant_lift(const FibrantReplacement& r, const StrongLiftProblem& problem);

// A functor with a registered constructive lift procedure.
struct Fibration {
  Functor p;
  std::function<StrongHomotopy(const StrongLiftProblem&)> lift;
};

Fibration trivial_fibration(const FinCatPtr& e, const FinCatPtr& point);
Fibration projection_fibration(const FinCatPtr& c, const FinCatPtr& d, const ProductCat& cd,
                               const FinCatPtr& point);
// Transport along a pullback square: pb must be pullback(p.p, g).
Fibration pullback_fibration(const Fibration& p, const Functor& g, const PullbackCat& pb);
// The composite p2 ∘ p1 lifts in two stages.
Fibration compose_fibrations(const Fibration& p2, const Fibration& p1);

// Exhaustive strong lift search (no registered procedure).
std::optional<StrongHomotopy> search_strong_lift(const Functor& p,
                                                 const StrongLiftProblem& problem,
                                                 long long cap = 100000);

// Length-preserving weak lift search: fiber paths over the base paths with
// localized morphism parts projecting onto the base spans at depth Z.
bool has_weak_lp_lift(const Functor& p, const StrongLiftProblem& problem, int zigzag = 3);

struct BatterySpec {
  std::vector<FinCatPtr> test_categories;  // defaults to {•, 𝟚, discrete₂}
  int max_homotopy_length = 2;
  int max_problems = 200;
  unsigned long long seed = 1;
  long long functor_cap = 100000;
  int zigzag = 3;
};

struct FibrationReport {
  int cells = 0;
  int strong_lifted = 0, weak_lifted = 0;
  bool verdicts_agree = true;
  bool all_lifted_strong = true, all_lifted_weak = true;
  nlohmann::json details;  // per-cell verdicts and first counterexample
};

FibrationReport check_fibration(const Functor& p, const BatterySpec& spec);

// Deterministic battery of π lifting problems over a base category.
std::vector<PiLiftProblem> sample_pi_problems(const FinCatPtr& base, int count,
                                              unsigned long long seed, int max_floor_len = 2,
                                              int max_homotopy_length = 2,
                                              long long cap = 100000);

// Deterministic battery of lifting problems through a functor with the given
// test categories.
std::vector<StrongLiftProblem> sample_lift_problems(const Functor& p, const BatterySpec& spec);

}  // namespace cathom
