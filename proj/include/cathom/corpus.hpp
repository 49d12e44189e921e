#pragma once

#include "cathom/fincat.hpp"

namespace cathom {
namespace corpus {

// The one-object one-morphism category "•".
FinCatPtr terminal();

// Free category on one arrow f : x -> y.
FinCatPtr interval();

// Parallel pair x ⇉ y with arrows f, g (the categorical circle).
FinCatPtr parallel_pair();

// Zig-zag category of length m: 0 -> 1 <- 2 -> 3 ...
FinCatPtr zigzag(int m);

// Discrete category on n objects o0..o{n-1}.
FinCatPtr discrete(int n);

}  // namespace corpus
}  // namespace cathom
