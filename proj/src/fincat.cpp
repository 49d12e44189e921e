#include "cathom/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace cathom {

int FinCat::object_index(const std::string& name) const {
  auto it = std::lower_bound(obj_names.begin(), obj_names.end(), name);
  if (it == obj_names.end() || *it != name)
    throw CatError(CatErrorKind::DanglingId, "unknown object id '" + name + "'");
  return static_cast<int>(it - obj_names.begin());
}

int FinCat::morphism_index(const std::string& name) const {
  auto it = std::lower_bound(mor_names.begin(), mor_names.end(), name);
  if (it == mor_names.end() || *it != name)
    throw CatError(CatErrorKind::DanglingId, "unknown morphism id '" + name + "'");
  return static_cast<int>(it - mor_names.begin());
}

void FinCat::build_hom() {
  const int n = num_objects();
  hom_.assign(static_cast<size_t>(n) * n, {});
  for (int m = 0; m < num_morphisms(); ++m) hom_[dom[m] * n + cod[m]].push_back(m);
}

FinCatPtr validate_category(const RawCategory& raw) {
  auto cat = std::make_shared<FinCat>();

  cat->obj_names = raw.objects;
  std::sort(cat->obj_names.begin(), cat->obj_names.end());
  if (std::adjacent_find(cat->obj_names.begin(), cat->obj_names.end()) != cat->obj_names.end())
    throw CatError(CatErrorKind::BadInput, "duplicate object id");

  for (const auto& m : raw.morphisms) cat->mor_names.push_back(m.id);
  std::sort(cat->mor_names.begin(), cat->mor_names.end());
  if (std::adjacent_find(cat->mor_names.begin(), cat->mor_names.end()) != cat->mor_names.end())
    throw CatError(CatErrorKind::BadInput, "duplicate morphism id");

  const int n = cat->num_objects();
  const int mm = cat->num_morphisms();
  cat->dom.assign(mm, -1);
  cat->cod.assign(mm, -1);
  for (const auto& m : raw.morphisms) {
    int idx = cat->morphism_index(m.id);
    cat->dom[idx] = cat->object_index(m.dom);  // throws DanglingId
    cat->cod[idx] = cat->object_index(m.cod);
  }

  cat->identity.assign(n, -1);
  for (const auto& [obj, mor] : raw.identities) {
    int o = cat->object_index(obj);
    int m = cat->morphism_index(mor);
    if (cat->dom[m] != o || cat->cod[m] != o)
      throw CatError(CatErrorKind::IdentityLawViolation,
                     "identity '" + mor + "' is not an endomorphism of '" + obj + "'");
    cat->identity[o] = m;
  }
  for (int o = 0; o < n; ++o)
    if (cat->identity[o] < 0)
      throw CatError(CatErrorKind::IdentityLawViolation,
                     "object '" + cat->obj_names[o] + "' has no identity morphism");

  cat->comp.assign(static_cast<size_t>(mm) * mm, -1);
  auto set_comp = [&](int g, int f, int h, const char* where) {
    if (!cat->composable(g, f))
      throw CatError(CatErrorKind::BadInput,
                     std::string(where) + ": non-composable pair (" + cat->mor_names[g] + ", " +
                         cat->mor_names[f] + ")");
    if (cat->dom[h] != cat->dom[f] || cat->cod[h] != cat->cod[g])
      throw CatError(CatErrorKind::BadInput,
                     std::string(where) + ": endpoints of '" + cat->mor_names[h] +
                         "' do not match " + cat->mor_names[g] + "∘" + cat->mor_names[f]);
    int& slot = cat->comp[g * mm + f];
    if (slot >= 0 && slot != h)
      throw CatError(CatErrorKind::BadInput, std::string(where) + ": conflicting composite for (" +
                                                 cat->mor_names[g] + ", " + cat->mor_names[f] + ")");
    slot = h;
  };
  for (const auto& t : raw.compose)
    set_comp(cat->morphism_index(t[0]), cat->morphism_index(t[1]), cat->morphism_index(t[2]),
             "compose table");
  // identity composites may be omitted; a present-but-wrong entry is caught
  // by the identity-law check below
  for (int f = 0; f < mm; ++f) {
    int& left = cat->comp[cat->identity[cat->cod[f]] * mm + f];
    if (left < 0) left = f;
    int& right = cat->comp[f * mm + cat->identity[cat->dom[f]]];
    if (right < 0) right = f;
  }

  for (int f = 0; f < mm; ++f)
    for (int g = 0; g < mm; ++g) {
      if (!cat->composable(g, f)) continue;
      if (cat->compose(g, f) < 0)
        throw CatError(CatErrorKind::MissingComposite, "missing composite " + cat->mor_names[g] +
                                                           "∘" + cat->mor_names[f]);
    }

  for (int f = 0; f < mm; ++f) {
    if (cat->compose(cat->identity[cat->cod[f]], f) != f ||
        cat->compose(f, cat->identity[cat->dom[f]]) != f)
      throw CatError(CatErrorKind::IdentityLawViolation,
                     "identity law fails at '" + cat->mor_names[f] + "'");
  }

  for (int f = 0; f < mm; ++f)
    for (int g = 0; g < mm; ++g) {
      if (!cat->composable(g, f)) continue;
      for (int h = 0; h < mm; ++h) {
        if (!cat->composable(h, g)) continue;
        if (cat->compose(h, cat->compose(g, f)) != cat->compose(cat->compose(h, g), f))
          throw CatError(CatErrorKind::AssociativityViolation,
                         "associativity fails on (" + cat->mor_names[h] + ", " + cat->mor_names[g] +
                             ", " + cat->mor_names[f] + ")");
      }
    }

  cat->build_hom();
  return cat;
}

void check_functor(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  if (static_cast<int>(f.obj_map.size()) != c.num_objects() ||
      static_cast<int>(f.mor_map.size()) != c.num_morphisms())
    throw CatError(CatErrorKind::BadInput, "functor maps have wrong arity");
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int im = f.mor_map[m];
    if (d.dom[im] != f.obj_map[c.dom[m]] || d.cod[im] != f.obj_map[c.cod[m]])
      throw CatError(CatErrorKind::BadInput,
                     "functor breaks dom/cod at '" + c.mor_names[m] + "'");
  }
  for (int o = 0; o < c.num_objects(); ++o)
    if (f.mor_map[c.identity[o]] != d.identity[f.obj_map[o]])
      throw CatError(CatErrorKind::BadInput,
                     "functor breaks identity at '" + c.obj_names[o] + "'");
  for (int a = 0; a < c.num_morphisms(); ++a)
    for (int b = 0; b < c.num_morphisms(); ++b) {
      if (!c.composable(b, a)) continue;
      if (f.mor_map[c.compose(b, a)] != d.compose(f.mor_map[b], f.mor_map[a]))
        throw CatError(CatErrorKind::BadInput, "functor breaks composition at (" + c.mor_names[b] +
                                                   ", " + c.mor_names[a] + ")");
    }
}

bool is_functor(const Functor& f) {
  try {
    check_functor(f);
    return true;
  } catch (const CatError&) {
    return false;
  }
}

Functor identity_functor(const FinCatPtr& c) {
  Functor f{c, c, {}, {}};
  f.obj_map.resize(c->num_objects());
  f.mor_map.resize(c->num_morphisms());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (f.target != g.source)
    throw CatError(CatErrorKind::BadInput, "functor composition: middle categories differ");
  Functor h{f.source, g.target, {}, {}};
  h.obj_map.reserve(f.obj_map.size());
  h.mor_map.reserve(f.mor_map.size());
  for (int o : f.obj_map) h.obj_map.push_back(g.obj_map[o]);
  for (int m : f.mor_map) h.mor_map.push_back(g.mor_map[m]);
  return h;
}

Functor constant_functor(const FinCatPtr& c, const FinCatPtr& d, int obj) {
  Functor f{c, d, std::vector<int>(c->num_objects(), obj),
            std::vector<int>(c->num_morphisms(), d->identity[obj])};
  return f;
}

bool is_natural(const NatTrans& t) {
  const FinCat& c = *t.from.source;
  const FinCat& d = *t.from.target;
  if (static_cast<int>(t.components.size()) != c.num_objects()) return false;
  for (int o = 0; o < c.num_objects(); ++o) {
    int comp = t.components[o];
    if (d.dom[comp] != t.from.obj_map[o] || d.cod[comp] != t.to.obj_map[o]) return false;
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int a = c.dom[m], b = c.cod[m];
    if (d.compose(t.to.mor_map[m], t.components[a]) !=
        d.compose(t.components[b], t.from.mor_map[m]))
      return false;
  }
  return true;
}

int Subcategory::obj_count() const {
  return static_cast<int>(std::count(objects.begin(), objects.end(), 1));
}
int Subcategory::mor_count() const {
  return static_cast<int>(std::count(morphisms.begin(), morphisms.end(), 1));
}

std::string Subcategory::key() const {
  std::string k(objects.begin(), objects.end());
  k.push_back('|');
  k.append(morphisms.begin(), morphisms.end());
  for (auto& ch : k)
    if (ch == 0 || ch == 1) ch = static_cast<char>('0' + ch);
  return k;
}

bool check_subcategory(const Subcategory& s) {
  const FinCat& c = *s.parent;
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (!s.has_mor(m)) continue;
    if (!s.has_obj(c.dom[m]) || !s.has_obj(c.cod[m])) return false;
  }
  for (int o = 0; o < c.num_objects(); ++o)
    if (s.has_obj(o) && !s.has_mor(c.identity[o])) return false;
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g) {
      if (!s.has_mor(f) || !s.has_mor(g) || !c.composable(g, f)) continue;
      if (!s.has_mor(c.compose(g, f))) return false;
    }
  return true;
}

Subcategory subcategory_generated(const FinCatPtr& c, const std::vector<int>& seed_mors) {
  Subcategory s{c, std::vector<char>(c->num_objects(), 0),
                std::vector<char>(c->num_morphisms(), 0)};
  for (int m : seed_mors) s.morphisms[m] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 0; m < c->num_morphisms(); ++m) {
      if (!s.morphisms[m]) continue;
      for (int o : {c->dom[m], c->cod[m]}) {
        if (!s.objects[o]) { s.objects[o] = 1; changed = true; }
        if (!s.morphisms[c->identity[o]]) { s.morphisms[c->identity[o]] = 1; changed = true; }
      }
    }
    for (int f = 0; f < c->num_morphisms(); ++f) {
      if (!s.morphisms[f]) continue;
      for (int g = 0; g < c->num_morphisms(); ++g) {
        if (!s.morphisms[g] || !c->composable(g, f)) continue;
        int h = c->compose(g, f);
        if (!s.morphisms[h]) { s.morphisms[h] = 1; changed = true; }
      }
    }
  }
  return s;
}

Subcategory full_subcategory(const FinCatPtr& c, const std::vector<int>& objs) {
  Subcategory s{c, std::vector<char>(c->num_objects(), 0),
                std::vector<char>(c->num_morphisms(), 0)};
  for (int o : objs) s.objects[o] = 1;
  for (int m = 0; m < c->num_morphisms(); ++m)
    if (s.objects[c->dom[m]] && s.objects[c->cod[m]]) s.morphisms[m] = 1;
  return s;
}

std::pair<FinCatPtr, Functor> realize_subcategory(const Subcategory& s) {
  const FinCat& p = *s.parent;
  RawCategory raw;
  for (int o = 0; o < p.num_objects(); ++o)
    if (s.has_obj(o)) raw.objects.push_back(p.obj_names[o]);
  for (int m = 0; m < p.num_morphisms(); ++m)
    if (s.has_mor(m))
      raw.morphisms.push_back({p.mor_names[m], p.obj_names[p.dom[m]], p.obj_names[p.cod[m]]});
  for (int o = 0; o < p.num_objects(); ++o)
    if (s.has_obj(o)) raw.identities[p.obj_names[o]] = p.mor_names[p.identity[o]];
  for (int f = 0; f < p.num_morphisms(); ++f)
    for (int g = 0; g < p.num_morphisms(); ++g) {
      if (!s.has_mor(f) || !s.has_mor(g) || !p.composable(g, f)) continue;
      raw.compose.push_back(
          {p.mor_names[g], p.mor_names[f], p.mor_names[p.compose(g, f)]});
    }
  FinCatPtr cat = validate_category(raw);
  Functor incl{cat, s.parent, {}, {}};
  for (const auto& name : cat->obj_names) incl.obj_map.push_back(p.object_index(name));
  for (const auto& name : cat->mor_names) incl.mor_map.push_back(p.morphism_index(name));
  return {cat, incl};
}

Functor restrict_functor(const Functor& f, const Subcategory& s, const FinCatPtr& realized,
                         const Functor& inclusion) {
  (void)s;
  Functor r{realized, f.target, {}, {}};
  for (int o : inclusion.obj_map) r.obj_map.push_back(f.obj_map[o]);
  for (int m : inclusion.mor_map) r.mor_map.push_back(f.mor_map[m]);
  return r;
}

static std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

ProductCat product(const FinCatPtr& c, const FinCatPtr& d) {
  RawCategory raw;
  for (const auto& a : c->obj_names)
    for (const auto& b : d->obj_names) raw.objects.push_back(pair_name(a, b));
  for (int f = 0; f < c->num_morphisms(); ++f)
    for (int g = 0; g < d->num_morphisms(); ++g)
      raw.morphisms.push_back({pair_name(c->mor_names[f], d->mor_names[g]),
                               pair_name(c->obj_names[c->dom[f]], d->obj_names[d->dom[g]]),
                               pair_name(c->obj_names[c->cod[f]], d->obj_names[d->cod[g]])});
  for (int a = 0; a < c->num_objects(); ++a)
    for (int b = 0; b < d->num_objects(); ++b)
      raw.identities[pair_name(c->obj_names[a], d->obj_names[b])] =
          pair_name(c->mor_names[c->identity[a]], d->mor_names[d->identity[b]]);
  for (int f1 = 0; f1 < c->num_morphisms(); ++f1)
    for (int g1 = 0; g1 < d->num_morphisms(); ++g1)
      for (int f2 = 0; f2 < c->num_morphisms(); ++f2)
        for (int g2 = 0; g2 < d->num_morphisms(); ++g2) {
          if (!c->composable(f2, f1) || !d->composable(g2, g1)) continue;
          raw.compose.push_back({pair_name(c->mor_names[f2], d->mor_names[g2]),
                                 pair_name(c->mor_names[f1], d->mor_names[g1]),
                                 pair_name(c->mor_names[c->compose(f2, f1)],
                                           d->mor_names[d->compose(g2, g1)])});
        }
  ProductCat p;
  p.cat = validate_category(raw);
  const FinCat& pc = *p.cat;
  p.obj_pair_a.resize(pc.num_objects());
  p.obj_pair_b.resize(pc.num_objects());
  p.mor_pair_a.resize(pc.num_morphisms());
  p.mor_pair_b.resize(pc.num_morphisms());
  for (int a = 0; a < c->num_objects(); ++a)
    for (int b = 0; b < d->num_objects(); ++b) {
      int o = pc.object_index(pair_name(c->obj_names[a], d->obj_names[b]));
      p.obj_pair_a[o] = a;
      p.obj_pair_b[o] = b;
    }
  for (int f = 0; f < c->num_morphisms(); ++f)
    for (int g = 0; g < d->num_morphisms(); ++g) {
      int m = pc.morphism_index(pair_name(c->mor_names[f], d->mor_names[g]));
      p.mor_pair_a[m] = f;
      p.mor_pair_b[m] = g;
    }
  p.pr1 = Functor{p.cat, c, p.obj_pair_a, p.mor_pair_a};
  p.pr2 = Functor{p.cat, d, p.obj_pair_b, p.mor_pair_b};
  return p;
}

int ProductCat::obj_of(int a, int b) const {
  for (int o = 0; o < cat->num_objects(); ++o)
    if (obj_pair_a[o] == a && obj_pair_b[o] == b) return o;
  throw CatError(CatErrorKind::BadInput, "no such product object");
}

int ProductCat::mor_of(int f, int g) const {
  for (int m = 0; m < cat->num_morphisms(); ++m)
    if (mor_pair_a[m] == f && mor_pair_b[m] == g) return m;
  throw CatError(CatErrorKind::BadInput, "no such product morphism");
}

Functor diagonal_functor(const FinCatPtr& c, const ProductCat& cc) {
  Functor d{c, cc.cat, {}, {}};
  for (int o = 0; o < c->num_objects(); ++o) d.obj_map.push_back(cc.obj_of(o, o));
  for (int m = 0; m < c->num_morphisms(); ++m) d.mor_map.push_back(cc.mor_of(m, m));
  return d;
}

PullbackCat pullback(const Functor& f, const Functor& g) {
  if (f.target != g.target)
    throw CatError(CatErrorKind::BadInput, "pullback: functors have different targets");
  ProductCat ab = product(f.source, g.source);
  const FinCat& p = *ab.cat;
  Subcategory s{ab.cat, std::vector<char>(p.num_objects(), 0),
                std::vector<char>(p.num_morphisms(), 0)};
  for (int o = 0; o < p.num_objects(); ++o)
    if (f.obj_map[ab.obj_pair_a[o]] == g.obj_map[ab.obj_pair_b[o]]) s.objects[o] = 1;
  for (int m = 0; m < p.num_morphisms(); ++m)
    if (f.mor_map[ab.mor_pair_a[m]] == g.mor_map[ab.mor_pair_b[m]]) s.morphisms[m] = 1;
  auto [cat, incl] = realize_subcategory(s);
  PullbackCat pb;
  pb.cat = cat;
  pb.pr_a = compose_functors(ab.pr1, incl);
  pb.pr_b = compose_functors(ab.pr2, incl);
  return pb;
}

bool is_connected(const FinCatPtr& c) {
  if (c->num_objects() == 0) throw CatError(CatErrorKind::EmptyCategory, "empty category");
  return connected_components(c).size() == 1;
}

std::vector<std::vector<int>> connected_components(const FinCatPtr& c) {
  const int n = c->num_objects();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (int m = 0; m < c->num_morphisms(); ++m) {
    adj[c->dom[m]].push_back(c->cod[m]);
    adj[c->cod[m]].push_back(c->dom[m]);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      members.push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) { comp[w] = comp[s]; q.push(w); }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<int> generator_morphisms(const FinCat& c) {
  std::vector<int> gens;
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    bool composite = false;
    for (int f = 0; f < c.num_morphisms() && !composite; ++f)
      for (int g = 0; g < c.num_morphisms(); ++g) {
        if (c.is_identity(f) || c.is_identity(g) || !c.composable(g, f)) continue;
        if (c.compose(g, f) == m) { composite = true; break; }
      }
    if (!composite) gens.push_back(m);
  }
  return gens;
}

namespace {

struct FunctorSearch {
  const FinCat& c;
  const FinCat& d;
  const FinCatPtr& cp;
  const FinCatPtr& dp;
  std::vector<int> mor_order;  // generators first, then remaining non-identities
  std::vector<Functor> out;

  FunctorSearch(const FinCatPtr& cp_, const FinCatPtr& dp_)
      : c(*cp_), d(*dp_), cp(cp_), dp(dp_) {
    std::vector<char> is_gen(c.num_morphisms(), 0);
    for (int g : generator_morphisms(c)) is_gen[g] = 1;
    for (int m = 0; m < c.num_morphisms(); ++m)
      if (is_gen[m]) mor_order.push_back(m);
    for (int m = 0; m < c.num_morphisms(); ++m)
      if (!is_gen[m] && !c.is_identity(m)) mor_order.push_back(m);
  }

  bool consistent(const std::vector<int>& mor_map, int just_set) const {
    for (int f = 0; f < c.num_morphisms(); ++f)
      for (int g : {just_set}) {
        for (auto [x, y] : {std::pair{g, f}, std::pair{f, g}}) {
          if (mor_map[x] < 0 || mor_map[y] < 0 || !c.composable(x, y)) continue;
          int h = c.compose(x, y);
          if (mor_map[h] >= 0 && d.compose(mor_map[x], mor_map[y]) != mor_map[h]) return false;
        }
      }
    return true;
  }

  void assign_mors(std::vector<int>& obj_map, std::vector<int>& mor_map, size_t k) {
    // propagate forced composites
    std::vector<std::pair<int, int>> forced;  // (mor, previous value) for rollback
    bool ok = true;
    bool changed = true;
    while (changed && ok) {
      changed = false;
      for (int f = 0; f < c.num_morphisms() && ok; ++f)
        for (int g = 0; g < c.num_morphisms(); ++g) {
          if (!c.composable(g, f) || mor_map[g] < 0 || mor_map[f] < 0) continue;
          int h = c.compose(g, f);
          int val = d.compose(mor_map[g], mor_map[f]);
          if (mor_map[h] < 0) {
            forced.push_back({h, -1});
            mor_map[h] = val;
            changed = true;
          } else if (mor_map[h] != val) {
            ok = false;
            break;
          }
        }
    }
    if (ok) {
      size_t kk = k;
      while (kk < mor_order.size() && mor_map[mor_order[kk]] >= 0) ++kk;
      if (kk == mor_order.size()) {
        bool total = true;
        for (int m = 0; m < c.num_morphisms(); ++m)
          if (mor_map[m] < 0) { total = false; break; }
        if (total) out.push_back(Functor{cp, dp, obj_map, mor_map});
      } else {
        int m = mor_order[kk];
        for (int cand : d.hom(obj_map[c.dom[m]], obj_map[c.cod[m]])) {
          mor_map[m] = cand;
          if (consistent(mor_map, m)) assign_mors(obj_map, mor_map, kk + 1);
          mor_map[m] = -1;
        }
      }
    }
    for (auto it = forced.rbegin(); it != forced.rend(); ++it) mor_map[it->first] = it->second;
  }

  void assign_objs(std::vector<int>& obj_map, int o) {
    if (o == c.num_objects()) {
      std::vector<int> mor_map(c.num_morphisms(), -1);
      for (int i = 0; i < c.num_objects(); ++i)
        mor_map[c.identity[i]] = d.identity[obj_map[i]];
      assign_mors(obj_map, mor_map, 0);
      return;
    }
    for (int t = 0; t < d.num_objects(); ++t) {
      obj_map[o] = t;
      // quick prune: every generator out of known objects must have a candidate
      bool feasible = true;
      for (int m = 0; m < c.num_morphisms() && feasible; ++m) {
        if (c.dom[m] > o || c.cod[m] > o) continue;
        if (d.hom(obj_map[c.dom[m]], obj_map[c.cod[m]]).empty()) feasible = false;
      }
      if (feasible) assign_objs(obj_map, o + 1);
    }
    obj_map[o] = -1;
  }
};

}  // namespace

std::vector<Functor> enumerate_functors(const FinCatPtr& c, const FinCatPtr& d, long long cap) {
  if (c->num_objects() > 0) {
    long long combos = 1;
    for (int i = 0; i < c->num_objects(); ++i) {
      combos *= std::max(1, d->num_objects());
      if (combos > cap)
        throw BudgetExceeded("functor enumeration: object assignment space exceeds cap");
    }
  }
  FunctorSearch fs(c, d);
  std::vector<int> obj_map(c->num_objects(), -1);
  fs.assign_objs(obj_map, 0);
  return std::move(fs.out);
}

}  // namespace cathom
