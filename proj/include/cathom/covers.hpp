#pragma once

#include <functional>
#include <optional>

#include "json.hpp"

#include "cathom/fincat.hpp"

namespace cathom {

// A composable walk (chain) left uncovered by every piece; morphism indices
// listed in composition order f1, f2, ... with cod(fi) = dom(fi+1).
struct BadChain {
  std::vector<int> chain;
};

// A cover is geometric when every composable chain lies inside one piece.
// Returns a shortest uncovered chain, or nullopt when the cover is geometric.
// Pieces must be subcategories of c covering all objects and morphisms.
std::optional<BadChain> is_geometric_cover(const FinCatPtr& c,
                                           const std::vector<Subcategory>& pieces);

// Every subcategory of c (object subset plus a closed morphism subset
// containing the identities), deduplicated, in canonical order. Throws
// BudgetExceeded when the candidate sweep exceeds the budget.
std::vector<Subcategory> enumerate_pieces(const FinCatPtr& c, long long budget = 100000);

// Returns a witness payload when the piece qualifies, nullopt otherwise.
using PiecePredicate = std::function<std::optional<nlohmann::json>(const Subcategory&)>;

struct CoverBudget {
  long long piece_budget = 100000;  // candidate subcategory sweep
  long long cover_budget = 1000;    // piece combinations per size
  // when the predicate restricts along subcategory inclusions (all the
  // invariant predicates do), subsets of passing pieces pass without
  // re-evaluation and the sweep runs top-down by size
  bool hereditary = true;
};

struct CoverSearchOutcome {
  enum Kind { Found, Infinite, Budget } kind = Budget;
  int n = -1;  // categorical convention: n+1 pieces used
  std::vector<Subcategory> pieces;
  std::vector<nlohmann::json> witnesses;
  long long lower = 0;  // established lower bound when Budget
};

// Smallest n such that some geometric cover by n+1 predicate-passing pieces
// exists. Infinite when even all passing pieces together fail to cover.
CoverSearchOutcome minimal_cover_search(const FinCatPtr& c, const PiecePredicate& pred,
                                        const CoverBudget& budget = {});

}  // namespace cathom
