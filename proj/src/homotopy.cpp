#include "cathom/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#ifdef CATHOM_HAVE_OPENMP
#include <omp.h>
#endif

namespace cathom {

bool check_strong_homotopy(const StrongHomotopy& h) {
  if (h.stages.empty() || h.links.size() + 1 != h.stages.size()) return false;
  for (size_t i = 0; i < h.links.size(); ++i) {
    const NatTrans& t = h.links[i];
    const Functor& a = i % 2 == 0 ? h.stages[i] : h.stages[i + 1];
    const Functor& b = i % 2 == 0 ? h.stages[i + 1] : h.stages[i];
    if (!(t.from == a) || !(t.to == b)) return false;
    if (!is_natural(t)) return false;
  }
  for (const Functor& f : h.stages)
    if (!is_functor(f)) return false;
  return true;
}

std::optional<NatTrans> nat_trans_search(const Functor& from, const Functor& to) {
  if (from.source != to.source || from.target != to.target) return std::nullopt;
  const FinCat& c = *from.source;
  const FinCat& d = *from.target;
  int n = c.num_objects();
  NatTrans t;
  t.from = from;
  t.to = to;
  t.components.assign(n, -1);
  // naturality only needs checking on generators
  std::vector<int> gens = generator_morphisms(c);
  std::function<bool(int)> rec = [&](int o) -> bool {
    if (o == n) return true;
    for (int a : d.hom(from.obj_map[o], to.obj_map[o])) {
      bool ok = true;
      t.components[o] = a;
      for (int g : gens) {
        int x = c.dom[g], y = c.cod[g];
        if (x > o || y > o) continue;  // square not yet determined
        if (d.compose(t.components[y], from.mor_map[g]) !=
            d.compose(to.mor_map[g], t.components[x])) {
          ok = false;
          break;
        }
      }
      t.components[o] = -1;
      if (!ok) continue;
      t.components[o] = a;
      if (rec(o + 1)) return true;
      t.components[o] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return t;
}

size_t FunctorGraph::index_of(const Functor& f) const {
  for (size_t i = 0; i < functors.size(); ++i)
    if (functors[i] == f) return i;
  throw CatError(CatErrorKind::BadInput, "functor not found in graph");
}

namespace {

void fill_edges(FunctorGraph& g, bool parallel) {
  size_t n = g.functors.size();
  g.edge.assign(n * n, 0);
  (void)parallel;
#ifdef CATHOM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && n > 8)
#endif
  for (long long k = 0; k < static_cast<long long>(n * n); ++k) {
    size_t i = static_cast<size_t>(k) / n, j = static_cast<size_t>(k) % n;
    if (nat_trans_search(g.functors[i], g.functors[j])) g.edge[k] = 1;
  }
}

FunctorGraph build_graph(const FinCatPtr& source, const FinCatPtr& target, long long cap,
                         bool parallel) {
  FunctorGraph g;
  g.source = source;
  g.target = target;
  g.functors = enumerate_functors(source, target, cap);
  fill_edges(g, parallel);
  return g;
}

}  // namespace

FunctorGraph build_functor_graph(const FinCatPtr& source, const FinCatPtr& target, long long cap) {
  return build_graph(source, target, cap, true);
}

FunctorGraph build_functor_graph_serial(const FinCatPtr& source, const FinCatPtr& target,
                                        long long cap) {
  return build_graph(source, target, cap, false);
}

std::vector<int> graph_components(const FunctorGraph& g) {
  size_t n = g.functors.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<size_t> q{s};
    while (!q.empty()) {
      size_t i = q.front();
      q.pop_front();
      for (size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && (g.has_edge(i, j) || g.has_edge(j, i))) {
          comp[j] = next;
          q.push_back(j);
        }
    }
    ++next;
  }
  return comp;
}

const FunctorGraph& HomotopyOracle::graph(const FinCatPtr& source, const FinCatPtr& target) {
  auto key = std::make_pair(source.get(), target.get());
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, build_functor_graph(source, target, functor_cap)).first;
  return it->second;
}

namespace {

// Assemble the alternating certificate from an undirected graph walk,
// inserting identity stages where the edge direction does not match parity.
StrongHomotopy certificate_from_walk(const FunctorGraph& g, const std::vector<size_t>& walk) {
  StrongHomotopy h;
  h.stages.push_back(g.functors[walk[0]]);
  auto identity_link = [&](const Functor& f, bool even_pos) {
    NatTrans t;
    t.from = f;
    t.to = f;
    for (int o : f.obj_map) t.components.push_back(f.target->identity[o]);
    (void)even_pos;
    return t;
  };
  for (size_t s = 0; s + 1 < walk.size(); ++s) {
    size_t a = walk[s], b = walk[s + 1];
    bool fwd_exists = g.has_edge(a, b);
    size_t pos = h.links.size();
    bool need_fwd = pos % 2 == 0;  // even slots want stage_i => stage_{i+1}
    // when placing b after a: a forward slot needs a=>b, a backward slot b=>a
    bool fits = need_fwd ? fwd_exists : g.has_edge(b, a);
    if (!fits) {  // burn one slot with an identity link to flip parity
      h.links.push_back(identity_link(g.functors[a], need_fwd));
      h.stages.push_back(g.functors[a]);
      pos = h.links.size();
      need_fwd = pos % 2 == 0;
    }
    NatTrans t = need_fwd ? *nat_trans_search(g.functors[a], g.functors[b])
                          : *nat_trans_search(g.functors[b], g.functors[a]);
    h.links.push_back(t);
    h.stages.push_back(g.functors[b]);
  }
  return h;
}

std::optional<StrongHomotopy> homotopic_in_graph(const FunctorGraph& g, const Functor& f,
                                                 const Functor& gg) {
  size_t a = g.index_of(f), b = g.index_of(gg);
  size_t n = g.functors.size();
  std::vector<int> prev(n, -2);
  prev[a] = -1;
  std::deque<size_t> q{a};
  while (!q.empty() && prev[b] == -2) {
    size_t i = q.front();
    q.pop_front();
    for (size_t j = 0; j < n; ++j)
      if (prev[j] == -2 && (g.has_edge(i, j) || g.has_edge(j, i))) {
        prev[j] = static_cast<int>(i);
        q.push_back(j);
      }
  }
  if (prev[b] == -2) return std::nullopt;
  std::vector<size_t> walk;
  for (int i = static_cast<int>(b); i != -1; i = prev[i]) walk.push_back(static_cast<size_t>(i));
  std::reverse(walk.begin(), walk.end());
  StrongHomotopy h = certificate_from_walk(g, walk);
  if (!check_strong_homotopy(h))
    throw CatError(CatErrorKind::BadInput, "internal: invalid homotopy certificate");
  return h;
}

}  // namespace

std::optional<StrongHomotopy> HomotopyOracle::homotopic(const Functor& f, const Functor& g) {
  return homotopic_in_graph(graph(f.source, f.target), f, g);
}

std::optional<StrongHomotopy> strong_homotopic(const Functor& f, const Functor& g, long long cap) {
  if (f.source != g.source || f.target != g.target)
    throw CatError(CatErrorKind::BadInput, "homotopy needs parallel functors");
  // natural transformations never move an object across components of the
  // target, so the sweep can be restricted to functors with f's component
  // signature; a signature mismatch settles the question outright
  std::vector<int> kappa(f.target->num_objects());
  {
    std::vector<std::vector<int>> comps = connected_components(f.target);
    for (size_t c = 0; c < comps.size(); ++c)
      for (int o : comps[c]) kappa[o] = static_cast<int>(c);
  }
  for (size_t o = 0; o < f.obj_map.size(); ++o)
    if (kappa[f.obj_map[o]] != kappa[g.obj_map[o]]) return std::nullopt;
  FunctorGraph gr;
  gr.source = f.source;
  gr.target = f.target;
  for (Functor& h : enumerate_functors(f.source, f.target, cap)) {
    bool match = true;
    for (size_t o = 0; o < h.obj_map.size(); ++o)
      if (kappa[h.obj_map[o]] != kappa[f.obj_map[o]]) match = false;
    if (match) gr.functors.push_back(std::move(h));
  }
  fill_edges(gr, true);
  return homotopic_in_graph(gr, f, g);
}

WeakHomotopy weak_from_strong(const StrongHomotopy& h) {
  WeakHomotopy w;
  w.from = h.from();
  w.to = h.to();
  const FinCatPtr& d = w.from.target;
  const FinCat& c = *w.from.source;
  size_t m = h.links.size();
  for (int o = 0; o < c.num_objects(); ++o) {
    Path p;
    p.base = d;
    for (size_t i = 0; i <= m; ++i) p.objects.push_back(h.stages[i].obj_map[o]);
    for (size_t i = 0; i < m; ++i) p.arrows.push_back(h.links[i].components[o]);
    if (p.length() % 2 != 0) {  // keep the final stage as the endpoint
      p.objects.push_back(p.objects.back());
      p.arrows.push_back(d->identity[p.objects.back()]);
    }
    check_path(p);
    w.obj_paths.push_back(std::move(p));
  }
  for (int f = 0; f < c.num_morphisms(); ++f) {
    PathMorphism pm;
    pm.from = w.obj_paths[c.dom[f]];
    pm.to = w.obj_paths[c.cod[f]];
    pm.reparam = Reparam::identity(pm.from.length());
    for (size_t i = 0; i <= m; ++i) pm.components.push_back(h.stages[i].mor_map[f]);
    while (pm.components.size() < pm.from.objects.size())
      pm.components.push_back(pm.components.back());
    w.mor_spans.push_back(span_from_direct(pm));
  }
  return w;
}

bool check_weak_homotopy(const WeakHomotopy& h, int zigzag_depth, bool check_composites) {
  const FinCat& c = *h.from.source;
  if (h.from.source != h.to.source || h.from.target != h.to.target) return false;
  if (static_cast<int>(h.obj_paths.size()) != c.num_objects()) return false;
  if (static_cast<int>(h.mor_spans.size()) != c.num_morphisms()) return false;
  for (int o = 0; o < c.num_objects(); ++o) {
    const Path& p = h.obj_paths[o];
    if (p.base != h.from.target) return false;
    if (p.start() != h.from.obj_map[o] || p.end() != h.to.obj_map[o]) return false;
    check_path(p);
  }
  for (int f = 0; f < c.num_morphisms(); ++f) {
    const PathSpan& s = h.mor_spans[f];
    if (!(s.source == h.obj_paths[c.dom[f]]) || !(s.target == h.obj_paths[c.cod[f]]))
      return false;
    if (!check_span(s)) return false;
    if (s.comp_at_start() != h.from.mor_map[f] || s.comp_at_end() != h.to.mor_map[f])
      return false;
  }
  for (int o = 0; o < c.num_objects(); ++o)
    if (!spans_equal(h.mor_spans[c.identity[o]], identity_span(h.obj_paths[o]), zigzag_depth))
      return false;
  if (check_composites) {
    for (int g = 0; g < c.num_morphisms(); ++g)
      for (int f = 0; f < c.num_morphisms(); ++f) {
        if (!c.composable(g, f)) continue;
        PathSpan comp = compose_spans(h.mor_spans[g], h.mor_spans[f]);
        if (!spans_equal(comp, h.mor_spans[c.compose(g, f)], zigzag_depth)) return false;
      }
  }
  return true;
}

std::optional<WeakHomotopy> weak_homotopic(const Functor& f, const Functor& g, long long cap) {
  // on finite categories the weak and strong relations agree, so decide
  // strongly and convert the certificate
  std::optional<StrongHomotopy> s = strong_homotopic(f, g, cap);
  if (!s) return std::nullopt;
  WeakHomotopy w = weak_from_strong(*s);
  if (!check_weak_homotopy(w))
    throw CatError(CatErrorKind::BadInput, "internal: invalid weak certificate");
  return w;
}

std::optional<WeakHomotopy> weak_homotopic_direct(const Functor& f, const Functor& g, int max_len,
                                                  int zigzag_depth) {
  const FinCat& c = *f.source;
  const FinCatPtr& d = f.target;
  std::vector<std::vector<Path>> cand(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) {
    cand[o] = enumerate_reduced_paths(d, max_len, f.obj_map[o], g.obj_map[o]);
    if (cand[o].empty()) return std::nullopt;
  }
  WeakHomotopy w;
  w.from = f;
  w.to = g;
  w.obj_paths.assign(c.num_objects(), Path{});
  w.mor_spans.assign(c.num_morphisms(), PathSpan{});
  std::function<bool(int)> rec = [&](int o) -> bool {
    if (o == c.num_objects()) {
      for (int m = 0; m < c.num_morphisms(); ++m) {
        EndpointConstraint ec{f.mor_map[m], g.mor_map[m]};
        FindResult r = find_path_morphism(w.obj_paths[c.dom[m]], w.obj_paths[c.cod[m]],
                                          zigzag_depth, ec);
        if (r.verdict != SearchVerdict::Found) return false;
        w.mor_spans[m] = *r.morphism;
      }
      return check_weak_homotopy(w, zigzag_depth);
    }
    for (const Path& p : cand[o]) {
      w.obj_paths[o] = p;
      if (rec(o + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return w;
}

std::optional<StrongHomotopy> is_contractible(const FinCatPtr& c, long long cap) {
  Functor id = identity_functor(c);
  FunctorGraph g = build_functor_graph(c, c, cap);
  std::vector<int> comp = graph_components(g);
  size_t idi = g.index_of(id);
  for (int o = 0; o < c->num_objects(); ++o) {
    Functor k = constant_functor(c, c, o);
    size_t ki = g.index_of(k);
    if (comp[ki] == comp[idi]) return homotopic_in_graph(g, id, k);
  }
  return std::nullopt;
}

std::optional<HomotopyEquivalence> homotopy_equivalent(const FinCatPtr& c, const FinCatPtr& d,
                                                       long long cap) {
  std::vector<Functor> fwd = enumerate_functors(c, d, cap);
  std::vector<Functor> bwd = enumerate_functors(d, c, cap);
  FunctorGraph gc = build_functor_graph(c, c, cap);
  FunctorGraph gd = build_functor_graph(d, d, cap);
  Functor idc = identity_functor(c), idd = identity_functor(d);
  for (const Functor& f : fwd)
    for (const Functor& g : bwd) {
      std::optional<StrongHomotopy> unit = homotopic_in_graph(gc, compose_functors(g, f), idc);
      if (!unit) continue;
      std::optional<StrongHomotopy> counit = homotopic_in_graph(gd, compose_functors(f, g), idd);
      if (!counit) continue;
      return HomotopyEquivalence{f, g, std::move(*unit), std::move(*counit)};
    }
  return std::nullopt;
}

}  // namespace cathom
