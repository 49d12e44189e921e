#pragma once

#include <optional>

#include "cathom/fincat.hpp"
#include "cathom/paths.hpp"

namespace cathom {

// An alternating zig-zag of natural transformations: links[i] goes
// stages[i] => stages[i+1] at even i, stages[i+1] => stages[i] at odd i.
struct StrongHomotopy {
  std::vector<Functor> stages;
  std::vector<NatTrans> links;

  const Functor& from() const { return stages.front(); }
  const Functor& to() const { return stages.back(); }
};

bool check_strong_homotopy(const StrongHomotopy& h);

std::optional<NatTrans> nat_trans_search(const Functor& from, const Functor& to);

// All functors source -> target with the natural-transformation relation in
// both directions. The edge sweep has serial and OpenMP variants.
struct FunctorGraph {
  FinCatPtr source, target;
  std::vector<Functor> functors;
  std::vector<char> edge;  // edge[i * n + j] = exists nat trans functors[i] => functors[j]

  bool has_edge(size_t i, size_t j) const { return edge[i * functors.size() + j] != 0; }
  size_t index_of(const Functor& f) const;  // throws if absent
};

FunctorGraph build_functor_graph(const FinCatPtr& source, const FinCatPtr& target,
                                 long long cap = 100000);
FunctorGraph build_functor_graph_serial(const FinCatPtr& source, const FinCatPtr& target,
                                        long long cap = 100000);

// Connected component of each functor under "some nat trans either way".
std::vector<int> graph_components(const FunctorGraph& g);

// A per-(source,target) cache of functor graphs plus homotopy queries.
class HomotopyOracle {
public:
  const FunctorGraph& graph(const FinCatPtr& source, const FinCatPtr& target);
  std::optional<StrongHomotopy> homotopic(const Functor& f, const Functor& g);
  long long functor_cap = 100000;

private:
  std::map<std::pair<const FinCat*, const FinCat*>, FunctorGraph> cache_;
};

std::optional<StrongHomotopy> strong_homotopic(const Functor& f, const Functor& g,
                                               long long cap = 100000);

// Weak homotopy certificate: one path in the target per source object and one
// localized path morphism per source morphism.
struct WeakHomotopy {
  Functor from, to;
  std::vector<Path> obj_paths;
  std::vector<PathSpan> mor_spans;
};

WeakHomotopy weak_from_strong(const StrongHomotopy& h);
bool check_weak_homotopy(const WeakHomotopy& h, int zigzag_depth = 3,
                         bool check_composites = false);

std::optional<WeakHomotopy> weak_homotopic(const Functor& f, const Functor& g,
                                           long long cap = 100000);

// Bounded direct search for a weak homotopy without the strong bridge:
// diagnostic only (path lengths up to max_len, paddings up to zigzag_depth).
std::optional<WeakHomotopy> weak_homotopic_direct(const Functor& f, const Functor& g,
                                                  int max_len, int zigzag_depth);

// Certificate that the identity is homotopic to a constant functor.
std::optional<StrongHomotopy> is_contractible(const FinCatPtr& c, long long cap = 100000);

struct HomotopyEquivalence {
  Functor fwd, bwd;
  StrongHomotopy unit;    // bwd ∘ fwd ≃ id
  StrongHomotopy counit;  // fwd ∘ bwd ≃ id
};

std::optional<HomotopyEquivalence> homotopy_equivalent(const FinCatPtr& c, const FinCatPtr& d,
                                                       long long cap = 100000);

}  // namespace cathom
