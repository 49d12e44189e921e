#pragma once

#include "cathom/fincat.hpp"
#include "cathom/paths.hpp"

namespace cathom {

// The localized path category truncated at length L, materialized as a finite
// category together with the endpoint functor into base × base.
struct TruncatedPathCat {
  FinCatPtr base;
  int max_len = 4, zigzag = 3;
  FinCatPtr cat;
  ProductCat base_sq;
  Functor endpoint;  // I ↦ (I(0), I(end)); [φ] ↦ (φ at 0, φ at end)
  std::vector<Path> obj_paths;      // per object of cat
  std::vector<PathSpan> mor_spans;  // canonical class representatives

  int object_of(const Path& p) const;                   // -1 when absent
  int morphism_of(const PathSpan& s, int depth) const;  // classify; -1 when absent
};

TruncatedPathCat truncated_path_category(const FinCatPtr& base, int max_len, int zigzag,
                                         long long cap = 100000);

// Pullback of an endpoint projection of the truncated path category along
// functors out of an index category: objects are pairs (c, I) with I a
// reduced path from f(c) (and to g(c) when g is constrained).
struct PathPullback {
  FinCatPtr base;   // D, where the paths live
  FinCatPtr index;  // C
  int max_len = 4, zigzag = 3;
  bool end_constrained = false;
  FinCatPtr cat;
  Functor proj;  // cat -> index
  std::vector<int> obj_index;       // per object of cat: the index object
  std::vector<Path> obj_paths;
  std::vector<int> mor_index;       // per morphism of cat: the index morphism
  std::vector<PathSpan> mor_spans;

  int object_of(int c, const Path& p) const;
  int morphism_of(int f, const PathSpan& s, int depth) const;
};

// Pullback of π : PD_L -> D×D along (f, g) : C -> D×D.
PathPullback path_pullback(const Functor& f, const Functor& g, int max_len, int zigzag,
                           long long cap = 100000);

// Pullback of π₀ : PD_L -> D along f alone (free final endpoint); the
// substrate of fibrant replacement.
PathPullback initial_path_pullback(const Functor& f, int max_len, int zigzag,
                                   long long cap = 100000);

}  // namespace cathom
