#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cathom {

// A finite category presented by explicit composition tables. Objects and
// morphisms are indexed after a canonical lexicographic sort of their ids,
// so enumeration order is reproducible across runs.
class FinCat {
public:
  std::vector<std::string> obj_names;
  std::vector<std::string> mor_names;
  std::vector<int> dom;       // per morphism
  std::vector<int> cod;       // per morphism
  std::vector<int> identity;  // per object -> morphism index
  std::vector<int> comp;      // comp[g * M + f] = g∘f, -1 when undefined

  int num_objects() const { return static_cast<int>(obj_names.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names.size()); }

  int compose(int g, int f) const { return comp[g * num_morphisms() + f]; }
  bool composable(int g, int f) const { return cod[f] == dom[g]; }
  bool is_identity(int m) const { return identity[dom[m]] == m && dom[m] == cod[m]; }

  // hom[a][b]: morphisms a -> b in index order
  const std::vector<int>& hom(int a, int b) const { return hom_[a * num_objects() + b]; }

  int object_index(const std::string& name) const;
  int morphism_index(const std::string& name) const;

  void build_hom();

private:
  std::vector<std::vector<int>> hom_;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

enum class CatErrorKind {
  MissingComposite,
  AssociativityViolation,
  IdentityLawViolation,
  DanglingId,
  EmptyCategory,
  EndpointMismatch,
  ShapeMismatch,
  BadInput,
};

struct CatError : std::runtime_error {
  CatErrorKind kind;
  CatError(CatErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct BudgetExceeded : std::runtime_error {
  // best bounds obtained before giving up, when meaningful
  long long lower = -1, upper = -1;
  explicit BudgetExceeded(const std::string& msg, long long lo = -1, long long hi = -1)
      : std::runtime_error(msg), lower(lo), upper(hi) {}
};

// Raw, unvalidated description as it appears in category files.
struct RawCategory {
  std::vector<std::string> objects;
  struct RawMor { std::string id, dom, cod; };
  std::vector<RawMor> morphisms;
  std::map<std::string, std::string> identities;                      // object -> morphism
  std::vector<std::array<std::string, 3>> compose;                    // [g, f, h]
};

// Checks the category laws and returns the canonically sorted category.
// Identity composites may be omitted from the table; they are completed here.
// Throws CatError naming the first violated law.
FinCatPtr validate_category(const RawCategory& raw);

struct Functor {
  FinCatPtr source, target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  bool operator==(const Functor& o) const {
    return source == o.source && target == o.target && obj_map == o.obj_map &&
           mor_map == o.mor_map;
  }
};

// Throws CatError on a functor-law violation.
void check_functor(const Functor& f);
bool is_functor(const Functor& f);

Functor identity_functor(const FinCatPtr& c);
Functor compose_functors(const Functor& g, const Functor& f);  // g ∘ f
Functor constant_functor(const FinCatPtr& c, const FinCatPtr& d, int obj);

struct NatTrans {
  Functor from, to;              // same source/target
  std::vector<int> components;   // per source object, a morphism of target
};

bool is_natural(const NatTrans& t);

struct Subcategory {
  FinCatPtr parent;
  std::vector<char> objects;    // membership masks
  std::vector<char> morphisms;

  bool has_obj(int o) const { return objects[o] != 0; }
  bool has_mor(int m) const { return morphisms[m] != 0; }
  int obj_count() const;
  int mor_count() const;
  std::string key() const;      // canonical dedup key
};

bool check_subcategory(const Subcategory& s);

// Smallest subcategory containing the seed morphisms (closure under
// endpoints, identities and composition).
Subcategory subcategory_generated(const FinCatPtr& c, const std::vector<int>& seed_mors);
Subcategory full_subcategory(const FinCatPtr& c, const std::vector<int>& objs);

// Materializes a subcategory as its own category together with the inclusion.
std::pair<FinCatPtr, Functor> realize_subcategory(const Subcategory& s);

// Restriction of f to a subcategory of its source.
Functor restrict_functor(const Functor& f, const Subcategory& s, const FinCatPtr& realized,
                         const Functor& inclusion);

struct ProductCat {
  FinCatPtr cat;
  Functor pr1, pr2;
  std::vector<int> obj_pair_a, obj_pair_b;  // product object -> factor objects
  std::vector<int> mor_pair_a, mor_pair_b;
  int obj_of(int a, int b) const;
  int mor_of(int f, int g) const;
};

ProductCat product(const FinCatPtr& c, const FinCatPtr& d);

Functor diagonal_functor(const FinCatPtr& c, const ProductCat& cc);

struct PullbackCat {
  FinCatPtr cat;
  Functor pr_a, pr_b;
};

// Pullback of F : A -> C against G : B -> C, as the subcategory of A×B on
// pairs agreeing in C.
PullbackCat pullback(const Functor& f, const Functor& g);

// Throws CatError(EmptyCategory) on the empty category.
bool is_connected(const FinCatPtr& c);

std::vector<std::vector<int>> connected_components(const FinCatPtr& c);

// All functors C -> D in a deterministic order. Throws BudgetExceeded when
// |Obj(D)|^|Obj(C)| exceeds the cap.
std::vector<Functor> enumerate_functors(const FinCatPtr& c, const FinCatPtr& d,
                                        long long cap = 100000);

// Morphisms that are neither identities nor composites of two non-identities.
std::vector<int> generator_morphisms(const FinCat& c);

}  // namespace cathom
