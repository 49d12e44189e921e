#include "cathom/fibrations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "cathom/corpus.hpp"

namespace cathom {

bool check_path_functor(const PathFunctor& f) {
  const FinCat& c = *f.index;
  if (static_cast<int>(f.obj_paths.size()) != c.num_objects()) return false;
  if (static_cast<int>(f.mors.size()) != c.num_morphisms()) return false;
  for (const Path& p : f.obj_paths) {
    if (p.base != f.base) return false;
    check_path(p);
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    const PathMorphism& pm = f.mors[m];
    if (!(pm.from == f.obj_paths[c.dom[m]]) || !(pm.to == f.obj_paths[c.cod[m]])) return false;
    if (!(pm.reparam == Reparam::identity(pm.from.length()))) return false;
    if (!check_path_morphism(pm)) return false;
  }
  for (int o = 0; o < c.num_objects(); ++o)
    for (int i : f.mors[c.identity[o]].components)
      if (!f.base->is_identity(i)) return false;
  return true;
}

namespace {

// first/second endpoint data of the base homotopy, per stage and object
struct BBView {
  const PiLiftProblem& p;
  int h1(int stage, int c) const { return p.bb.obj_pair_a[p.h.stages[stage].obj_map[c]]; }
  int h2(int stage, int c) const { return p.bb.obj_pair_b[p.h.stages[stage].obj_map[c]]; }
  int s1(int stage, int f) const { return p.bb.mor_pair_a[p.h.stages[stage].mor_map[f]]; }
  int s2(int stage, int f) const { return p.bb.mor_pair_b[p.h.stages[stage].mor_map[f]]; }
  int u(int link, int c) const { return p.bb.mor_pair_a[p.h.links[link].components[c]]; }
  int v(int link, int c) const { return p.bb.mor_pair_b[p.h.links[link].components[c]]; }
};

}  // namespace

bool check_pi_lift_problem(const PiLiftProblem& p) {
  if (!check_strong_homotopy(p.h)) return false;
  if (p.h.stages[0].target != p.bb.cat) return false;
  if (!check_path_functor(p.floor)) return false;
  if (p.floor.index != p.h.stages[0].source || p.floor.base != p.base) return false;
  BBView bb{p};
  const FinCat& c = *p.floor.index;
  for (int o = 0; o < c.num_objects(); ++o)
    if (p.floor.obj_paths[o].start() != bb.h1(0, o) || p.floor.obj_paths[o].end() != bb.h2(0, o))
      return false;
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (p.floor.mors[m].components.front() != bb.s1(0, m) ||
        p.floor.mors[m].components.back() != bb.s2(0, m))
      return false;
  return true;
}

namespace {

Path staircase_path(const PiLiftProblem& p, int stage, int c) {
  BBView bb{p};
  bool odd = stage % 2 == 1;
  const Path& floor = p.floor.obj_paths[c];
  Path j;
  j.base = p.base;
  if (odd) {
    j.objects.push_back(bb.h1(stage, c));
    j.arrows.push_back(p.base->identity[bb.h1(stage, c)]);
  }
  for (int k = stage; k >= 1; --k) {
    j.objects.push_back(bb.h1(k, c));
    j.arrows.push_back(bb.u(k - 1, c));
  }
  j.objects.insert(j.objects.end(), floor.objects.begin(), floor.objects.end());
  j.arrows.insert(j.arrows.end(), floor.arrows.begin(), floor.arrows.end());
  for (int k = 1; k <= stage; ++k) {
    j.arrows.push_back(bb.v(k - 1, c));
    j.objects.push_back(bb.h2(k, c));
  }
  if (odd) {
    j.arrows.push_back(p.base->identity[bb.h2(stage, c)]);
    j.objects.push_back(bb.h2(stage, c));
  }
  check_path(j);
  return j;
}

PathMorphism staircase_morphism(const PiLiftProblem& p, int stage, int f) {
  BBView bb{p};
  bool odd = stage % 2 == 1;
  const FinCat& c = *p.floor.index;
  PathMorphism m;
  m.from = staircase_path(p, stage, c.dom[f]);
  m.to = staircase_path(p, stage, c.cod[f]);
  m.reparam = Reparam::identity(m.from.length());
  if (odd) m.components.push_back(bb.s1(stage, f));
  for (int k = stage; k >= 1; --k) m.components.push_back(bb.s1(k, f));
  const PathMorphism& floor = p.floor.mors[f];
  m.components.insert(m.components.end(), floor.components.begin(), floor.components.end());
  for (int k = 1; k <= stage; ++k) m.components.push_back(bb.s2(k, f));
  if (odd) m.components.push_back(bb.s2(stage, f));
  if (!check_path_morphism(m))
    throw CatError(CatErrorKind::ShapeMismatch, "internal: staircase stage morphism invalid");
  return m;
}

PathSpan staircase_connector(const PiLiftProblem& p, int link, int c) {
  BBView bb{p};
  PathSpan s;
  if (link % 2 == 0) {  // span stage -> stage+1 padding both ends of the source
    s.source = staircase_path(p, link, c);
    s.target = staircase_path(p, link + 1, c);
    s.pad_counts.assign(s.source.objects.size(), 0);
    s.pad_counts.front() += 1;
    s.pad_counts.back() += 1;
    Path apex = padded_path(s.source, s.pad_counts);
    s.leg.from = apex;
    s.leg.to = s.target;
    s.leg.reparam = Reparam::identity(apex.length());
    size_t n = apex.objects.size();
    for (size_t i = 0; i < n; ++i) {
      if (i < 2)
        s.leg.components.push_back(bb.u(link, c));
      else if (i >= n - 2)
        s.leg.components.push_back(bb.v(link, c));
      else
        s.leg.components.push_back(p.base->identity[apex.objects[i]]);
    }
  } else {  // a direct morphism stage+1 -> stage of equal length
    s.source = staircase_path(p, link + 1, c);
    s.target = staircase_path(p, link, c);
    s.pad_counts.assign(s.source.objects.size(), 0);
    s.leg.from = s.source;
    s.leg.to = s.target;
    s.leg.reparam = Reparam::identity(s.source.length());
    size_t n = s.source.objects.size();
    for (size_t i = 0; i < n; ++i) {
      if (i == 0)
        s.leg.components.push_back(bb.u(link, c));
      else if (i == n - 1)
        s.leg.components.push_back(bb.v(link, c));
      else
        s.leg.components.push_back(p.base->identity[s.source.objects[i]]);
    }
  }
  if (!check_span(s))
    throw CatError(CatErrorKind::ShapeMismatch, "internal: staircase connector invalid");
  return s;
}

bool spans_equal_escalating(const PathSpan& a, const PathSpan& b, int depth) {
  for (int d = 0; d <= depth; d += depth > 0 ? depth : 1)
    if (spans_equal(a, b, d)) return true;
  return false;
}

}  // namespace

PathHomotopy path_fibration_lift(const PiLiftProblem& problem) {
  if (!check_pi_lift_problem(problem))
    throw CatError(CatErrorKind::BadInput, "malformed path-fibration lifting problem");
  const FinCat& c = *problem.floor.index;
  int n = static_cast<int>(problem.h.links.size());
  PathHomotopy out;
  out.index = problem.floor.index;
  out.base = problem.base;
  out.length_preserving = true;
  for (int i = 0; i <= n; ++i) {
    PathFunctor stage;
    stage.index = out.index;
    stage.base = out.base;
    for (int o = 0; o < c.num_objects(); ++o)
      stage.obj_paths.push_back(staircase_path(problem, i, o));
    for (int m = 0; m < c.num_morphisms(); ++m)
      stage.mors.push_back(staircase_morphism(problem, i, m));
    out.stages.push_back(std::move(stage));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<PathSpan> link;
    for (int o = 0; o < c.num_objects(); ++o)
      link.push_back(staircase_connector(problem, i, o));
    out.links.push_back(std::move(link));
  }
  return out;
}

bool validate_pi_lift(const PiLiftProblem& problem, const PathHomotopy& lift, int zigzag) {
  BBView bb{problem};
  const FinCat& c = *problem.floor.index;
  int n = static_cast<int>(problem.h.links.size());
  if (static_cast<int>(lift.stages.size()) != n + 1) return false;
  if (static_cast<int>(lift.links.size()) != n) return false;
  for (const PathFunctor& stage : lift.stages)
    if (!check_path_functor(stage)) return false;
  // start face is the floor
  for (int o = 0; o < c.num_objects(); ++o)
    if (!(lift.stages[0].obj_paths[o] == problem.floor.obj_paths[o])) return false;
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (!(lift.stages[0].mors[m] == problem.floor.mors[m])) return false;
  // endpoint projection reproduces the base homotopy
  for (int i = 0; i <= n; ++i) {
    for (int o = 0; o < c.num_objects(); ++o) {
      const Path& p = lift.stages[i].obj_paths[o];
      if (p.start() != bb.h1(i, o) || p.end() != bb.h2(i, o)) return false;
    }
    for (int m = 0; m < c.num_morphisms(); ++m) {
      const PathMorphism& pm = lift.stages[i].mors[m];
      if (pm.components.front() != bb.s1(i, m) || pm.components.back() != bb.s2(i, m))
        return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int o = 0; o < c.num_objects(); ++o) {
      const PathSpan& l = lift.links[i][o];
      const Path& lo = lift.stages[i].obj_paths[o];
      const Path& hi = lift.stages[i + 1].obj_paths[o];
      if (i % 2 == 0) {
        if (!(l.source == lo) || !(l.target == hi)) return false;
      } else {
        if (!(l.source == hi) || !(l.target == lo)) return false;
      }
      if (!check_span(l)) return false;
      if (l.comp_at_start() != bb.u(i, o) || l.comp_at_end() != bb.v(i, o)) return false;
    }
    // links are natural against stage morphisms, up to localized equality
    for (int m = 0; m < c.num_morphisms(); ++m) {
      int x = c.dom[m], y = c.cod[m];
      PathSpan fi = span_from_direct(lift.stages[i].mors[m]);
      PathSpan fi1 = span_from_direct(lift.stages[i + 1].mors[m]);
      PathSpan lhs = i % 2 == 0 ? compose_spans(lift.links[i][y], fi)
                                : compose_spans(fi, lift.links[i][x]);
      PathSpan rhs = i % 2 == 0 ? compose_spans(fi1, lift.links[i][x])
                                : compose_spans(lift.links[i][y], fi1);
      if (!spans_equal_escalating(lhs, rhs, zigzag)) return false;
    }
  }
  if (lift.length_preserving && static_cast<int>(lift.stages.size()) != n + 1) return false;
  return true;
}

namespace {

Path even_form(const Path& p) {
  if (p.length() % 2 == 0) return p;
  Path q = p;
  q.objects.push_back(q.objects.back());
  q.arrows.push_back(q.base->identity[q.objects.back()]);
  return q;
}

// bounce counts such that padded_path(reduced, counts) == padded, if any
std::optional<std::vector<int>> padding_counts_of(const Path& padded, const Path& reduced) {
  size_t np = padded.objects.size(), nr = reduced.objects.size();
  std::vector<int> counts(nr, 0);
  std::function<bool(size_t, size_t)> rec = [&](size_t i, size_t j) -> bool {
    if (i == nr) return j == np;
    if (j >= np || padded.objects[j] != reduced.objects[i]) return false;
    for (int k = 0;; ++k) {
      size_t tail = j + 2 * static_cast<size_t>(k);  // after the bounce block
      if (tail >= np + 1 || tail + 1 > np) break;
      bool block_ok = true;
      for (size_t t = j; t < tail && block_ok; ++t)
        block_ok = padded.objects[t + 1] == reduced.objects[i] &&
                   padded.base->is_identity(padded.arrows[t]);
      if (!block_ok) break;
      // the connecting arrow must match the reduced arrow
      if (i + 1 < nr) {
        if (tail < np - 1 && padded.arrows[tail] == reduced.arrows[i] &&
            padded.objects[tail + 1] == reduced.objects[i + 1]) {
          counts[i] = k;
          if (rec(i + 1, tail + 1)) return true;
        }
      } else {
        if (tail == np - 1) {
          counts[i] = k;
          return true;
        }
      }
    }
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  return counts;
}

// Transport a span between unreduced even paths to their normal forms,
// inverting the W-collapse on the source and composing it on the target.
PathSpan conjugate_span(const PathSpan& s) {
  Path ns = normalize_path(s.source), nt = normalize_path(s.target);
  std::optional<std::vector<int>> cs = padding_counts_of(s.source, ns);
  std::optional<std::vector<int>> ct = padding_counts_of(s.target, nt);
  if (!cs || !ct)
    throw CatError(CatErrorKind::ShapeMismatch, "path does not collapse onto its normal form");
  PathSpan inv_w;  // ns -> s.source
  inv_w.source = ns;
  inv_w.target = s.source;
  inv_w.pad_counts = *cs;
  inv_w.leg = identity_path_morphism(s.source);
  PathMorphism wt;  // s.target -> nt
  wt.from = s.target;
  wt.to = nt;
  wt.reparam = padding_collapse(nt, *ct);
  for (int o : s.target.objects) wt.components.push_back(s.target.base->identity[o]);
  return compose_spans(span_from_direct(wt), compose_spans(s, inv_w));
}

int classify_in_pullback(const PathPullback& pp, int index_mor, const PathSpan& s, int zigzag) {
  int m = pp.morphism_of(index_mor, s, zigzag);
  if (m < 0) m = pp.morphism_of(index_mor, s, 2 * zigzag + s.pad_total());
  if (m < 0)
    throw BudgetExceeded("could not classify a localized morphism in the path pullback");
  return m;
}

// The contraction path of one replacement object (c, I): walk through the
// truncated prefixes of I inside E_F.
Path contraction_path(const PathPullback& pp, int obj, int zigzag) {
  int c = pp.obj_index[obj];
  const Path& full = pp.obj_paths[obj];
  int idc = pp.index->identity[c];
  Path out;
  out.base = pp.cat;
  auto prefix = [&](int k) {
    Path p;
    p.base = full.base;
    p.objects.assign(full.objects.begin(), full.objects.begin() + k + 1);
    p.arrows.assign(full.arrows.begin(), full.arrows.begin() + k);
    return p;
  };
  auto vertex = [&](int k) {
    int o = pp.object_of(c, normalize_path(prefix(k)));
    if (o < 0) throw BudgetExceeded("contraction prefix missing from the truncated pullback");
    return o;
  };
  out.objects.push_back(vertex(0));
  for (int k = 0; k < full.length(); ++k) {
    PathSpan step;
    if (k % 2 == 0) {  // forward: prefix_k -> even_form(prefix_{k+1})
      step.source = prefix(k);
      step.target = even_form(prefix(k + 1));
      step.pad_counts.assign(step.source.objects.size(), 0);
      step.pad_counts.back() = 1;
      Path apex = padded_path(step.source, step.pad_counts);
      step.leg.from = apex;
      step.leg.to = step.target;
      step.leg.reparam = Reparam::identity(apex.length());
      for (size_t i = 0; i < apex.objects.size(); ++i)
        step.leg.components.push_back(i <= static_cast<size_t>(k)
                                          ? full.base->identity[apex.objects[i]]
                                          : full.arrows[k]);
    } else {  // backward: prefix_{k+1} -> even_form(prefix_k)
      step.source = prefix(k + 1);
      step.target = even_form(prefix(k));
      step.pad_counts.assign(step.source.objects.size(), 0);
      step.leg.from = step.source;
      step.leg.to = step.target;
      step.leg.reparam = Reparam::identity(step.source.length());
      for (size_t i = 0; i < step.source.objects.size(); ++i)
        step.leg.components.push_back(i + 1 < step.source.objects.size()
                                          ? full.base->identity[step.source.objects[i]]
                                          : full.arrows[k]);
    }
    if (!check_span(step))
      throw CatError(CatErrorKind::ShapeMismatch, "internal: contraction step invalid");
    out.arrows.push_back(classify_in_pullback(pp, idc, conjugate_span(step), zigzag));
    out.objects.push_back(vertex(k + 1));
  }
  check_path(out);
  return out;
}

}  // namespace

FibrantReplacement fibrant_replacement(const Functor& f, int max_len, int zigzag, long long cap) {
  FibrantReplacement r;
  r.f = f;
  r.zigzag = zigzag;
  r.max_len = max_len;
  r.ef = initial_path_pullback(f, max_len, zigzag, cap);
  const FinCat& c = *f.source;

  r.f1.source = f.source;
  r.f1.target = r.ef.cat;
  for (int o = 0; o < c.num_objects(); ++o) {
    int eo = r.ef.object_of(o, Path::constant(f.target, f.obj_map[o]));
    if (eo < 0) throw CatError(CatErrorKind::BadInput, "internal: constant path missing");
    r.f1.obj_map.push_back(eo);
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    PathMorphism pm;
    pm.from = Path::constant(f.target, f.obj_map[c.dom[m]]);
    pm.to = Path::constant(f.target, f.obj_map[c.cod[m]]);
    pm.reparam = Reparam::identity(0);
    pm.components.push_back(f.mor_map[m]);
    r.f1.mor_map.push_back(classify_in_pullback(r.ef, m, span_from_direct(pm), zigzag));
  }
  check_functor(r.f1);

  r.f2.source = r.ef.cat;
  r.f2.target = f.target;
  for (const Path& p : r.ef.obj_paths) r.f2.obj_map.push_back(p.end());
  for (const PathSpan& s : r.ef.mor_spans) r.f2.mor_map.push_back(s.comp_at_end());
  check_functor(r.f2);

  r.g = r.ef.proj;

  if (!(compose_functors(r.f2, r.f1) == f) ||
      !(compose_functors(r.g, r.f1) == identity_functor(f.source)))
    throw CatError(CatErrorKind::BadInput, "internal: replacement equations fail");

  // the retraction homotopy F1∘G ≃_w id
  r.contraction.from = compose_functors(r.f1, r.g);
  r.contraction.to = identity_functor(r.ef.cat);
  for (int o = 0; o < r.ef.cat->num_objects(); ++o)
    r.contraction.obj_paths.push_back(contraction_path(r.ef, o, zigzag));
  for (int m = 0; m < r.ef.cat->num_morphisms(); ++m) {
    EndpointConstraint ec{r.contraction.from.mor_map[m], m};
    const Path& from = r.contraction.obj_paths[r.ef.cat->dom[m]];
    const Path& to = r.contraction.obj_paths[r.ef.cat->cod[m]];
    FindResult found = find_path_morphism(from, to, zigzag, ec);
    if (found.verdict != SearchVerdict::Found)
      found = find_path_morphism(from, to, zigzag + 2, ec);
    if (found.verdict != SearchVerdict::Found)
      throw BudgetExceeded("no localized morphism found for the contraction certificate");
    r.contraction.mor_spans.push_back(*found.morphism);
  }
  if (!check_weak_homotopy(r.contraction, zigzag))
    throw CatError(CatErrorKind::BadInput, "internal: contraction certificate invalid");
  return r;
}

bool check_lift_problem(const Functor& p, const StrongLiftProblem& problem) {
  if (!check_strong_homotopy(problem.h)) return false;
  if (!is_functor(problem.floor)) return false;
  if (problem.floor.target != p.source) return false;
  if (problem.h.stages[0].target != p.target) return false;
  return compose_functors(p, problem.floor) == problem.h.stages[0];
}

bool validate_lift(const Functor& p, const StrongLiftProblem& problem,
                   const StrongHomotopy& lift) {
  if (!check_strong_homotopy(lift)) return false;
  if (lift.stages.size() != problem.h.stages.size()) return false;
  if (!(lift.stages[0] == problem.floor)) return false;
  for (size_t i = 0; i < lift.stages.size(); ++i)
    if (!(compose_functors(p, lift.stages[i]) == problem.h.stages[i])) return false;
  for (size_t i = 0; i < lift.links.size(); ++i)
    for (size_t o = 0; o < lift.links[i].components.size(); ++o)
      if (p.mor_map[lift.links[i].components[o]] != problem.h.links[i].components[o])
        return false;
  return true;
}

StrongHomotopy fibrant_lift(const FibrantReplacement& r, const StrongLiftProblem& problem) {
  if (!check_lift_problem(r.f2, problem))
    throw CatError(CatErrorKind::BadInput, "malformed lifting problem for the replacement");
  const FinCat& c = *problem.floor.source;  // the test category C'
  const FinCatPtr& d = r.f.target;
  int n = static_cast<int>(problem.h.links.size());

  auto concat_stage = [&](int i, int b) {  // floor path extended by the walk
    int e = problem.floor.obj_map[b];
    Path j = r.ef.obj_paths[e];
    for (int k = 0; k < i; ++k) {
      j.arrows.push_back(problem.h.links[k].components[b]);
      j.objects.push_back(problem.h.stages[k + 1].obj_map[b]);
    }
    return even_form(j);
  };

  StrongHomotopy lift;
  for (int i = 0; i <= n; ++i) {
    Functor stage;
    stage.source = problem.floor.source;
    stage.target = r.ef.cat;
    for (int b = 0; b < c.num_objects(); ++b) {
      int cb = r.ef.obj_index[problem.floor.obj_map[b]];
      int eo = r.ef.object_of(cb, normalize_path(concat_stage(i, b)));
      if (eo < 0) throw BudgetExceeded("truncation exceeded while extending the floor path");
      stage.obj_map.push_back(eo);
    }
    for (int m = 0; m < c.num_morphisms(); ++m) {
      int b = c.dom[m], b2 = c.cod[m];
      const PathSpan& rep = r.ef.mor_spans[problem.floor.mor_map[m]];
      Path a = concat_stage(i, b), bb = concat_stage(i, b2);
      PathSpan ext;
      ext.source = a;
      ext.target = bb;
      ext.pad_counts = rep.pad_counts;
      ext.pad_counts.resize(a.objects.size(), 0);
      Path apex = padded_path(a, ext.pad_counts);
      ext.leg.from = apex;
      ext.leg.to = bb;
      ext.leg.reparam = rep.leg.reparam;
      ext.leg.components = rep.leg.components;
      size_t floor_len = rep.source.objects.size();       // floor path objects of b
      size_t floor_len2 = rep.target.objects.size();
      for (size_t j = rep.leg.reparam.map.size(); j < apex.objects.size(); ++j) {
        size_t walk = j - (rep.leg.reparam.map.size() - 1);  // walk slot 1..
        ext.leg.reparam.map.push_back(static_cast<int>(floor_len2 - 1 + walk));
        int stage_k = std::min(static_cast<int>(walk), i);
        ext.leg.components.push_back(problem.h.stages[stage_k].mor_map[m]);
      }
      (void)floor_len;
      if (!check_span(ext))
        throw CatError(CatErrorKind::ShapeMismatch, "internal: extended floor morphism invalid");
      int idx = r.ef.mor_index[problem.floor.mor_map[m]];
      stage.mor_map.push_back(classify_in_pullback(r.ef, idx, conjugate_span(ext), r.zigzag));
    }
    check_functor(stage);
    lift.stages.push_back(std::move(stage));
  }
  for (int i = 0; i < n; ++i) {
    NatTrans link;
    link.from = i % 2 == 0 ? lift.stages[i] : lift.stages[i + 1];
    link.to = i % 2 == 0 ? lift.stages[i + 1] : lift.stages[i];
    for (int b = 0; b < c.num_objects(); ++b) {
      int cb = r.ef.obj_index[problem.floor.obj_map[b]];
      int idc = r.ef.index->identity[cb];
      PathSpan step;
      if (i % 2 == 0) {  // pad the shorter stage at the tail and push along the link
        step.source = concat_stage(i, b);
        step.target = concat_stage(i + 1, b);
        step.pad_counts.assign(step.source.objects.size(), 0);
        step.pad_counts.back() = 1;
        Path apex = padded_path(step.source, step.pad_counts);
        step.leg.from = apex;
        step.leg.to = step.target;
        step.leg.reparam = Reparam::identity(apex.length());
        for (size_t j = 0; j < apex.objects.size(); ++j)
          step.leg.components.push_back(j + 2 >= apex.objects.size()
                                            ? problem.h.links[i].components[b]
                                            : d->identity[apex.objects[j]]);
      } else {
        step.source = concat_stage(i + 1, b);
        step.target = concat_stage(i, b);
        step.pad_counts.assign(step.source.objects.size(), 0);
        step.leg.from = step.source;
        step.leg.to = step.target;
        step.leg.reparam = Reparam::identity(step.source.length());
        for (size_t j = 0; j < step.source.objects.size(); ++j)
          step.leg.components.push_back(j + 1 == step.source.objects.size()
                                            ? problem.h.links[i].components[b]
                                            : d->identity[step.source.objects[j]]);
      }
      if (!check_span(step))
        throw CatError(CatErrorKind::ShapeMismatch, "internal: lift connector invalid");
      link.components.push_back(classify_in_pullback(r.ef, idc, conjugate_span(step), r.zigzag));
    }
    lift.links.push_back(std::move(link));
  }
  if (!validate_lift(r.f2, problem, lift))
    throw CatError(CatErrorKind::BadInput, "internal: fibrant lift failed validation");
  return lift;
}

namespace {

// All functors s : C -> E with prescribed p∘s, in deterministic order.
std::vector<Functor> constrained_functors(const FinCatPtr& c, const Functor& p,
                                          const Functor& image, long long cap) {
  const FinCat& u = *c;
  const FinCat& e = *p.source;
  std::vector<Functor> out;
  Functor s;
  s.source = c;
  s.target = p.source;
  s.obj_map.assign(u.num_objects(), -1);
  s.mor_map.assign(u.num_morphisms(), -1);
  std::function<void(int)> mor_rec = [&](int m) {
    if (static_cast<long long>(out.size()) >= cap) return;
    if (m == u.num_morphisms()) {
      if (is_functor(s)) out.push_back(s);
      return;
    }
    for (int em = 0; em < e.num_morphisms(); ++em) {
      if (p.mor_map[em] != image.mor_map[m]) continue;
      if (e.dom[em] != s.obj_map[u.dom[m]] || e.cod[em] != s.obj_map[u.cod[m]]) continue;
      if (u.is_identity(m) && !e.is_identity(em)) continue;
      bool ok = true;
      s.mor_map[m] = em;
      for (int m2 = 0; m2 <= m && ok; ++m2) {
        if (s.mor_map[m2] < 0) continue;
        if (u.composable(m, m2) && s.mor_map[u.compose(m, m2)] >= 0 &&
            e.compose(em, s.mor_map[m2]) != s.mor_map[u.compose(m, m2)])
          ok = false;
        if (u.composable(m2, m) && s.mor_map[u.compose(m2, m)] >= 0 &&
            e.compose(s.mor_map[m2], em) != s.mor_map[u.compose(m2, m)])
          ok = false;
      }
      if (ok) mor_rec(m + 1);
      s.mor_map[m] = -1;
    }
  };
  std::function<void(int)> obj_rec = [&](int o) {
    if (o == u.num_objects()) {
      mor_rec(0);
      return;
    }
    for (int eo = 0; eo < e.num_objects(); ++eo) {
      if (p.obj_map[eo] != image.obj_map[o]) continue;
      s.obj_map[o] = eo;
      obj_rec(o + 1);
      s.obj_map[o] = -1;
    }
  };
  obj_rec(0);
  return out;
}

std::optional<NatTrans> constrained_nat_trans(const Functor& from, const Functor& to,
                                              const Functor& p,
                                              const std::vector<int>& base_components) {
  const FinCat& c = *from.source;
  const FinCat& e = *from.target;
  NatTrans t;
  t.from = from;
  t.to = to;
  t.components.assign(c.num_objects(), -1);
  std::vector<int> gens = generator_morphisms(c);
  std::function<bool(int)> rec = [&](int o) -> bool {
    if (o == c.num_objects()) return true;
    for (int a : e.hom(from.obj_map[o], to.obj_map[o])) {
      if (p.mor_map[a] != base_components[o]) continue;
      t.components[o] = a;
      bool ok = true;
      for (int g : gens) {
        int x = c.dom[g], y = c.cod[g];
        if (x > o || y > o) continue;
        if (e.compose(t.components[y], from.mor_map[g]) !=
            e.compose(to.mor_map[g], t.components[x])) {
          ok = false;
          break;
        }
      }
      if (ok && rec(o + 1)) return true;
      t.components[o] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return t;
}

}  // namespace

std::optional<StrongHomotopy> search_strong_lift(const Functor& p,
                                                 const StrongLiftProblem& problem,
                                                 long long cap) {
  if (!check_lift_problem(p, problem))
    throw CatError(CatErrorKind::BadInput, "malformed lifting problem");
  int n = static_cast<int>(problem.h.links.size());
  StrongHomotopy lift;
  lift.stages.push_back(problem.floor);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    for (const Functor& next :
         constrained_functors(problem.floor.source, p, problem.h.stages[i + 1], cap)) {
      const Functor& cur = lift.stages.back();
      std::optional<NatTrans> link =
          i % 2 == 0 ? constrained_nat_trans(cur, next, p, problem.h.links[i].components)
                     : constrained_nat_trans(next, cur, p, problem.h.links[i].components);
      if (!link) continue;
      lift.stages.push_back(next);
      lift.links.push_back(*link);
      if (rec(i + 1)) return true;
      lift.stages.pop_back();
      lift.links.pop_back();
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  if (!validate_lift(p, problem, lift))
    throw CatError(CatErrorKind::BadInput, "internal: searched lift failed validation");
  return lift;
}

bool has_weak_lp_lift(const Functor& p, const StrongLiftProblem& problem, int zigzag) {
  if (!check_lift_problem(p, problem))
    throw CatError(CatErrorKind::BadInput, "malformed lifting problem");
  WeakHomotopy base = weak_from_strong(problem.h);
  const FinCat& c = *problem.floor.source;
  const FinCat& e = *p.source;

  // fiber paths over each base path, starting at the floor
  std::vector<std::vector<Path>> cand(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) {
    const Path& bp = base.obj_paths[o];
    Path cur;
    cur.base = p.source;
    cur.objects.push_back(problem.floor.obj_map[o]);
    std::function<void(int)> rec = [&](int k) {
      if (k == bp.length()) {
        cand[o].push_back(cur);
        return;
      }
      bool fwd = k % 2 == 0;
      for (int a = 0; a < e.num_morphisms(); ++a) {
        if (p.mor_map[a] != bp.arrows[k]) continue;
        int tip = cur.objects.back();
        if (fwd ? e.dom[a] != tip : e.cod[a] != tip) continue;
        cur.arrows.push_back(a);
        cur.objects.push_back(fwd ? e.cod[a] : e.dom[a]);
        rec(k + 1);
        cur.arrows.pop_back();
        cur.objects.pop_back();
      }
    };
    rec(0);
    if (cand[o].empty()) return false;
  }

  auto project_span = [&](const PathSpan& s) {
    auto project_path = [&](const Path& q) {
      Path out;
      out.base = p.target;
      for (int o : q.objects) out.objects.push_back(p.obj_map[o]);
      for (int a : q.arrows) out.arrows.push_back(p.mor_map[a]);
      return out;
    };
    PathSpan out;
    out.source = project_path(s.source);
    out.target = project_path(s.target);
    out.pad_counts = s.pad_counts;
    out.leg.from = project_path(s.leg.from);
    out.leg.to = out.target;
    out.leg.reparam = s.leg.reparam;
    for (int a : s.leg.components) out.leg.components.push_back(p.mor_map[a]);
    return out;
  };

  std::vector<Path> chosen(c.num_objects());
  std::vector<PathSpan> spans(c.num_morphisms());
  std::function<bool(int)> pick_spans = [&](int m) -> bool {
    if (m == c.num_morphisms()) {
      for (int g = 0; g < c.num_morphisms(); ++g)  // functoriality on composable pairs
        for (int f2 = 0; f2 < c.num_morphisms(); ++f2) {
          if (!c.composable(g, f2)) continue;
          if (!spans_equal_escalating(compose_spans(spans[g], spans[f2]),
                                      spans[c.compose(g, f2)], zigzag))
            return false;
        }
      return true;
    }
    EndpointConstraint ec{problem.floor.mor_map[m], -1};
    for (const PathSpan& s :
         hom_span_classes(chosen[c.dom[m]], chosen[c.cod[m]], zigzag, ec)) {
      if (!spans_equal_escalating(project_span(s), base.mor_spans[m], zigzag)) continue;
      spans[m] = s;
      if (pick_spans(m + 1)) return true;
    }
    return false;
  };
  std::function<bool(int)> pick_paths = [&](int o) -> bool {
    if (o == c.num_objects()) return pick_spans(0);
    for (const Path& q : cand[o]) {
      chosen[o] = q;
      if (pick_paths(o + 1)) return true;
    }
    return false;
  };
  return pick_paths(0);
}

Fibration trivial_fibration(const FinCatPtr& e, const FinCatPtr& point) {
  if (point->num_objects() != 1 || point->num_morphisms() != 1)
    throw CatError(CatErrorKind::BadInput, "the target of a trivial fibration is a point");
  Fibration f;
  f.p.source = e;
  f.p.target = point;
  f.p.obj_map.assign(e->num_objects(), 0);
  f.p.mor_map.assign(e->num_morphisms(), 0);
  f.lift = [](const StrongLiftProblem& problem) {
    StrongHomotopy lift;
    lift.stages.assign(problem.h.stages.size(), problem.floor);
    for (size_t i = 0; i + 1 < problem.h.stages.size(); ++i) {
      NatTrans t;
      t.from = problem.floor;
      t.to = problem.floor;
      for (int o : problem.floor.obj_map)
        t.components.push_back(problem.floor.target->identity[o]);
      lift.links.push_back(t);
    }
    return lift;
  };
  return f;
}

Fibration projection_fibration(const FinCatPtr& c, const FinCatPtr& d, const ProductCat& cd,
                               const FinCatPtr& point) {
  (void)point;
  Fibration f;
  f.p = cd.pr1;
  f.lift = [cd, c, d](const StrongLiftProblem& problem) {
    // pair each base stage with the frozen second factor of the floor
    StrongHomotopy lift;
    const FinCat& u = *problem.floor.source;
    for (size_t i = 0; i < problem.h.stages.size(); ++i) {
      Functor s;
      s.source = problem.floor.source;
      s.target = cd.cat;
      for (int o = 0; o < u.num_objects(); ++o)
        s.obj_map.push_back(cd.obj_of(problem.h.stages[i].obj_map[o],
                                      cd.obj_pair_b[problem.floor.obj_map[o]]));
      for (int m = 0; m < u.num_morphisms(); ++m)
        s.mor_map.push_back(cd.mor_of(problem.h.stages[i].mor_map[m],
                                      cd.mor_pair_b[problem.floor.mor_map[m]]));
      lift.stages.push_back(std::move(s));
    }
    for (size_t i = 0; i < problem.h.links.size(); ++i) {
      NatTrans t;
      t.from = i % 2 == 0 ? lift.stages[i] : lift.stages[i + 1];
      t.to = i % 2 == 0 ? lift.stages[i + 1] : lift.stages[i];
      for (int o = 0; o < u.num_objects(); ++o) {
        int dob = cd.obj_pair_b[problem.floor.obj_map[o]];
        t.components.push_back(
            cd.mor_of(problem.h.links[i].components[o], d->identity[dob]));
      }
      lift.links.push_back(std::move(t));
    }
    return lift;
  };
  return f;
}

Fibration pullback_fibration(const Fibration& p, const Functor& g, const PullbackCat& pb) {
  Fibration out;
  out.p = pb.pr_b;
  Fibration inner = p;
  Functor pr_a = pb.pr_a, pr_b = pb.pr_b;
  FinCatPtr total = pb.cat;
  out.lift = [inner, g, pr_a, pr_b, total](const StrongLiftProblem& problem) {
    StrongLiftProblem pushed;
    for (const Functor& s : problem.h.stages) pushed.h.stages.push_back(compose_functors(g, s));
    for (const NatTrans& l : problem.h.links) {
      NatTrans t;
      size_t i = pushed.h.links.size();
      t.from = i % 2 == 0 ? pushed.h.stages[i] : pushed.h.stages[i + 1];
      t.to = i % 2 == 0 ? pushed.h.stages[i + 1] : pushed.h.stages[i];
      for (int comp : l.components) t.components.push_back(g.mor_map[comp]);
      pushed.h.links.push_back(std::move(t));
    }
    pushed.floor = compose_functors(pr_a, problem.floor);
    StrongHomotopy inner_lift = inner.lift(pushed);
    // pair back: objects and morphisms of the pullback are named pairs
    const FinCat& e = *pr_a.target;
    const FinCat& b2 = *pr_b.target;
    StrongHomotopy lift;
    for (size_t i = 0; i < problem.h.stages.size(); ++i) {
      Functor s;
      s.source = problem.floor.source;
      s.target = total;
      const FinCat& u = *problem.floor.source;
      for (int o = 0; o < u.num_objects(); ++o)
        s.obj_map.push_back(total->object_index(
            "(" + e.obj_names[inner_lift.stages[i].obj_map[o]] + "," +
            b2.obj_names[problem.h.stages[i].obj_map[o]] + ")"));
      for (int m = 0; m < u.num_morphisms(); ++m)
        s.mor_map.push_back(total->morphism_index(
            "(" + e.mor_names[inner_lift.stages[i].mor_map[m]] + "," +
            b2.mor_names[problem.h.stages[i].mor_map[m]] + ")"));
      lift.stages.push_back(std::move(s));
    }
    for (size_t i = 0; i < problem.h.links.size(); ++i) {
      NatTrans t;
      t.from = i % 2 == 0 ? lift.stages[i] : lift.stages[i + 1];
      t.to = i % 2 == 0 ? lift.stages[i + 1] : lift.stages[i];
      for (size_t o = 0; o < problem.h.links[i].components.size(); ++o)
        t.components.push_back(total->morphism_index(
            "(" + e.mor_names[inner_lift.links[i].components[o]] + "," +
            b2.mor_names[problem.h.links[i].components[o]] + ")"));
      lift.links.push_back(std::move(t));
    }
    return lift;
  };
  return out;
}

Fibration compose_fibrations(const Fibration& p2, const Fibration& p1) {
  if (p1.p.target != p2.p.source)
    throw CatError(CatErrorKind::BadInput, "fibration composition mismatch");
  Fibration out;
  out.p = compose_functors(p2.p, p1.p);
  Fibration top = p1, bottom = p2;
  out.lift = [top, bottom](const StrongLiftProblem& problem) {
    StrongLiftProblem mid;
    mid.h = problem.h;
    mid.floor = compose_functors(top.p, problem.floor);
    StrongLiftProblem upper;
    upper.h = bottom.lift(mid);
    upper.floor = problem.floor;
    return top.lift(upper);
  };
  return out;
}

std::vector<StrongLiftProblem> sample_lift_problems(const Functor& p, const BatterySpec& spec) {
  std::vector<FinCatPtr> pool = spec.test_categories;
  if (pool.empty()) pool = {corpus::terminal(), corpus::interval(), corpus::discrete(2)};
  std::mt19937_64 rng(spec.seed);
  std::vector<StrongLiftProblem> out;
  for (const FinCatPtr& c : pool) {
    FunctorGraph g = build_functor_graph(c, p.target, spec.functor_cap);
    size_t nf = g.functors.size();
    if (nf == 0) continue;
    int per_cat = spec.max_problems / static_cast<int>(pool.size()) + 1;
    for (int t = 0; t < per_cat && static_cast<int>(out.size()) < spec.max_problems; ++t) {
      size_t cur = rng() % nf;
      StrongHomotopy h;
      h.stages.push_back(g.functors[cur]);
      int len = static_cast<int>(rng() % (spec.max_homotopy_length + 1));
      for (int i = 0; i < len; ++i) {
        bool fwd_slot = h.links.size() % 2 == 0;
        std::vector<size_t> nexts;
        for (size_t j = 0; j < nf; ++j)
          if (fwd_slot ? g.has_edge(cur, j) : g.has_edge(j, cur)) nexts.push_back(j);
        if (nexts.empty()) break;
        size_t nxt = nexts[rng() % nexts.size()];
        std::optional<NatTrans> link = fwd_slot
                                           ? nat_trans_search(g.functors[cur], g.functors[nxt])
                                           : nat_trans_search(g.functors[nxt], g.functors[cur]);
        h.links.push_back(*link);
        h.stages.push_back(g.functors[nxt]);
        cur = nxt;
      }
      std::vector<Functor> floors =
          constrained_functors(c, p, h.stages[0], spec.functor_cap);
      if (floors.empty()) continue;
      StrongLiftProblem problem;
      problem.h = h;
      problem.floor = floors[rng() % floors.size()];
      out.push_back(std::move(problem));
    }
  }
  return out;
}

FibrationReport check_fibration(const Functor& p, const BatterySpec& spec) {
  FibrationReport rep;
  rep.details["cells"] = nlohmann::json::array();
  for (const StrongLiftProblem& problem : sample_lift_problems(p, spec)) {
    bool strong = search_strong_lift(p, problem, spec.functor_cap).has_value();
    bool weak = has_weak_lp_lift(p, problem, spec.zigzag);
    ++rep.cells;
    if (strong) ++rep.strong_lifted;
    if (weak) ++rep.weak_lifted;
    rep.all_lifted_strong = rep.all_lifted_strong && strong;
    rep.all_lifted_weak = rep.all_lifted_weak && weak;
    if (strong != weak) rep.verdicts_agree = false;
    nlohmann::json cell;
    cell["homotopy_length"] = problem.h.links.size();
    cell["test_category_objects"] = problem.floor.source->num_objects();
    cell["strong"] = strong;
    cell["weak_length_preserving"] = weak;
    rep.details["cells"].push_back(cell);
  }
  rep.details["verdicts_agree"] = rep.verdicts_agree;
  return rep;
}

std::vector<PiLiftProblem> sample_pi_problems(const FinCatPtr& base, int count,
                                              unsigned long long seed, int max_floor_len,
                                              int max_homotopy_length, long long cap) {
  (void)max_floor_len;
  std::vector<FinCatPtr> pool = {corpus::terminal(), corpus::interval(), corpus::discrete(2)};
  std::mt19937_64 rng(seed);
  ProductCat bb = product(base, base);
  std::vector<PiLiftProblem> out;
  std::map<const FinCat*, FunctorGraph> base_graphs, bb_graphs;
  for (const FinCatPtr& c : pool) {
    base_graphs.emplace(c.get(), build_functor_graph(c, base, cap));
    bb_graphs.emplace(c.get(), build_functor_graph(c, bb.cat, cap));
  }
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 20) {
    ++attempts;
    const FinCatPtr& c = pool[rng() % pool.size()];
    const FunctorGraph& g = base_graphs.at(c.get());
    const FunctorGraph& gbb = bb_graphs.at(c.get());
    size_t nf = g.functors.size();
    if (nf == 0) continue;
    // a floor is a weak homotopy between two strongly homotopic functors
    size_t f0 = rng() % nf;
    std::vector<int> comp = graph_components(g);
    std::vector<size_t> mates;
    for (size_t j = 0; j < nf; ++j)
      if (comp[j] == comp[f0]) mates.push_back(j);
    size_t g0 = mates[rng() % mates.size()];
    std::optional<StrongHomotopy> s = strong_homotopic(g.functors[f0], g.functors[g0], cap);
    if (!s) continue;
    WeakHomotopy floor_w = weak_from_strong(*s);

    PiLiftProblem problem;
    problem.base = base;
    problem.bb = bb;
    problem.floor.index = c;
    problem.floor.base = base;
    problem.floor.obj_paths = floor_w.obj_paths;
    for (const PathSpan& sp : floor_w.mor_spans) problem.floor.mors.push_back(sp.leg);

    Functor pairing;  // (F0, G0) : C -> B×B
    pairing.source = c;
    pairing.target = bb.cat;
    for (int o = 0; o < c->num_objects(); ++o)
      pairing.obj_map.push_back(bb.obj_of(g.functors[f0].obj_map[o], g.functors[g0].obj_map[o]));
    for (int m = 0; m < c->num_morphisms(); ++m)
      pairing.mor_map.push_back(bb.mor_of(g.functors[f0].mor_map[m], g.functors[g0].mor_map[m]));
    size_t cur = gbb.index_of(pairing);
    problem.h.stages.push_back(pairing);
    int len = static_cast<int>(rng() % (max_homotopy_length + 1));
    for (int i = 0; i < len; ++i) {
      bool fwd_slot = problem.h.links.size() % 2 == 0;
      std::vector<size_t> nexts;
      for (size_t j = 0; j < gbb.functors.size(); ++j)
        if (fwd_slot ? gbb.has_edge(cur, j) : gbb.has_edge(j, cur)) nexts.push_back(j);
      if (nexts.empty()) break;
      size_t nxt = nexts[rng() % nexts.size()];
      std::optional<NatTrans> link =
          fwd_slot ? nat_trans_search(gbb.functors[cur], gbb.functors[nxt])
                   : nat_trans_search(gbb.functors[nxt], gbb.functors[cur]);
      problem.h.links.push_back(*link);
      problem.h.stages.push_back(gbb.functors[nxt]);
      cur = nxt;
    }
    if (!check_pi_lift_problem(problem)) continue;
    out.push_back(std::move(problem));
  }
  return out;
}

}  // namespace cathom
