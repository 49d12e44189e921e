#pragma once

#include <optional>

#include "cathom/fincat.hpp"

namespace cathom {

// A zig-zag path in a category: arrows point forward at even indices and
// backward at odd ones. Normal forms always have even length.
struct Path {
  FinCatPtr base;
  std::vector<int> objects;  // m + 1
  std::vector<int> arrows;   // m; a[i] : o[i] -> o[i+1] (even i), o[i+1] -> o[i] (odd i)

  int length() const { return static_cast<int>(arrows.size()); }
  int start() const { return objects.front(); }
  int end() const { return objects.back(); }

  static Path constant(const FinCatPtr& base, int obj, int length = 0);

  bool operator==(const Path& o) const {
    return base == o.base && objects == o.objects && arrows == o.arrows;
  }
  std::string literal() const;
};

struct PathHash {
  size_t operator()(const Path& p) const;
};

// Arrow literal: alternating object and morphism ids, ["x","f","y",...].
Path path_from_literal(const FinCatPtr& base, const std::vector<std::string>& literal);

// Throws CatError(ShapeMismatch) when arrows do not type-check.
void check_path(const Path& p);

// Right-pads odd length by an identity, then removes identity bounces
// leftmost-first. Idempotent.
Path normalize_path(const Path& p);
bool is_reduced(const Path& p);

Path reverse_path(const Path& p);
Path concat_paths(const Path& p, const Path& q);  // throws EndpointMismatch
std::pair<int, int> endpoints(const Path& p);

// A monotone step map {0..m} -> {0..n} with F(0)=0, F(m)=n whose collapsed
// generator runs have even length (so orientations are preserved).
struct Reparam {
  std::vector<int> map;  // size m+1
  int source_length() const { return static_cast<int>(map.size()) - 1; }
  int target_length() const { return map.back(); }
  int operator()(int i) const { return map[i]; }
  bool operator==(const Reparam& o) const { return map == o.map; }
  static Reparam identity(int m);
};

bool valid_reparam(const Reparam& f);
Reparam compose_reparams(const Reparam& g, const Reparam& f);  // g ∘ f
std::vector<Reparam> enumerate_reparams(int m, int n);

struct PathMorphism {
  Path from, to;
  Reparam reparam;
  std::vector<int> components;  // size m+1, components[i] : from.o[i] -> to.o[F(i)]

  bool operator==(const PathMorphism& o) const {
    return from == o.from && to == o.to && reparam == o.reparam && components == o.components;
  }
};

bool check_path_morphism(const PathMorphism& m);
PathMorphism identity_path_morphism(const Path& p);
PathMorphism compose_path_morphisms(const PathMorphism& g, const PathMorphism& f);

struct EndpointConstraint {
  int at_start = -1;  // required component at index 0, or -1
  int at_end = -1;
};

// All (F, α) : I -> J with the given endpoint constraint, deterministic order.
std::vector<PathMorphism> direct_morphisms(const Path& from, const Path& to,
                                           EndpointConstraint ec = {},
                                           size_t cap = size_t(-1));

// A W-padding of a path, recorded as bounce counts per object position:
// position i is repeated 2*counts[i] extra times by identity arrows.
Path padded_path(const Path& p, const std::vector<int>& counts);
Reparam padding_collapse(const Path& p, const std::vector<int>& counts);
// All count vectors with sum <= max_pairs, in deterministic order.
std::vector<std::vector<int>> enumerate_pad_counts(int positions, int max_pairs);

// A localized morphism source -> target represented as a right fraction
// leg ∘ w⁻¹, where w : apex -> source is the W-collapse of a padding.
struct PathSpan {
  Path source, target;
  std::vector<int> pad_counts;  // padding of source defining the apex
  PathMorphism leg;             // apex -> target

  int pad_total() const;
  Path apex() const { return padded_path(source, pad_counts); }
  int comp_at_start() const { return leg.components.front(); }
  int comp_at_end() const { return leg.components.back(); }
  std::string key() const;  // deterministic ordering/serialization key
};

bool check_span(const PathSpan& s);
PathSpan identity_span(const Path& p);
PathSpan span_from_direct(const PathMorphism& m);

// Right-fraction equality via a common refinement of the two paddings,
// allowing up to extra_depth additional bounce pairs.
bool spans_equal(const PathSpan& a, const PathSpan& b, int extra_depth);

// Collapses bounce pairs the leg is constant across: an exact,
// class-preserving rewrite that keeps paddings small.
PathSpan reduce_span(const PathSpan& s);

// Constructive pasting second ∘ first; never fails for valid spans.
// The result is returned in reduced form.
PathSpan compose_spans(const PathSpan& second, const PathSpan& first);

enum class SearchVerdict { Found, AbsentExhaustive, AbsentWithinBound };

struct FindResult {
  SearchVerdict verdict;
  std::optional<PathSpan> morphism;
};

// Bounded search for a localized morphism I -> J: paddings of I up to
// zigzag_bound bounce pairs, then direct morphisms. Inconclusive absence is
// reported distinctly from proven absence.
FindResult find_path_morphism(const Path& from, const Path& to, int zigzag_bound,
                              EndpointConstraint ec = {});

// Strict search: identity reparameterization after stabilizing both
// paths to a common length by constant right-padding. Exhaustive.
FindResult find_path_morphism_strict(const Path& from, const Path& to);

// All localized morphism classes I -> J at padding depth <= zigzag_bound,
// one canonical representative each (lexicographically least key).
std::vector<PathSpan> hom_span_classes(const Path& from, const Path& to, int zigzag_bound,
                                       EndpointConstraint ec = {}, size_t cap = 20000);

// Reduced paths of even length <= max_len, optionally with fixed endpoints
// (-1 = free), in deterministic order.
std::vector<Path> enumerate_reduced_paths(const FinCatPtr& base, int max_len, int start_obj = -1,
                                          int end_obj = -1);

}  // namespace cathom
