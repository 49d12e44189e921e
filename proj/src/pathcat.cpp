#include "cathom/pathcat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cathom {

namespace {

std::string obj_tag(const std::string& prefix, const Path& p) {
  return prefix.empty() ? p.literal() : prefix + ":" + p.literal();
}

// Shared skeleton: objects are (tag, path) pairs grouped by an index object,
// morphisms are localized-morphism classes grouped by an index morphism.
struct Builder {
  FinCatPtr base;
  int zigzag;
  long long cap;

  struct Obj {
    std::string name;
    int index_obj;
    Path path;
  };
  struct Mor {
    std::string name;
    int index_mor;
    int from, to;  // Obj positions
    PathSpan span;
  };
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  std::map<std::string, int> by_key;  // exact representative lookup fast path

  std::string cell_key(int index_mor, int from, int to, const PathSpan& s) const {
    std::ostringstream os;
    os << index_mor << "|" << from << "|" << to << "|" << s.key();
    return os.str();
  }

  void add_object(const std::string& name, int index_obj, const Path& p) {
    objs.push_back({name, index_obj, p});
    if (static_cast<long long>(objs.size()) > cap)
      throw BudgetExceeded("path category object budget exhausted", -1,
                           static_cast<long long>(objs.size()));
  }

  // enumerate morphism classes for every (index morphism, object pair) cell
  void add_classes(int index_mor, int from, int to, EndpointConstraint ec) {
    std::vector<PathSpan> classes =
        hom_span_classes(objs[from].path, objs[to].path, zigzag, ec);
    for (size_t k = 0; k < classes.size(); ++k) {
      std::ostringstream name;
      name << objs[from].name << ">" << objs[to].name << "#" << index_mor << "#" << k;
      by_key[cell_key(index_mor, from, to, classes[k])] = static_cast<int>(mors.size());
      mors.push_back({name.str(), index_mor, from, to, classes[k]});
      if (static_cast<long long>(mors.size()) > cap)
        throw BudgetExceeded("path category morphism budget exhausted", -1,
                             static_cast<long long>(mors.size()));
    }
  }

  int classify(int index_mor, int from, int to, const PathSpan& s, int depth) const {
    for (size_t m = 0; m < mors.size(); ++m) {
      if (mors[m].index_mor != index_mor || mors[m].from != from || mors[m].to != to) continue;
      if (spans_equal(s, mors[m].span, depth)) return static_cast<int>(m);
    }
    return -1;
  }

  int classify_escalating(int index_mor, int from, int to, const PathSpan& s) const {
    auto hit = by_key.find(cell_key(index_mor, from, to, s));
    if (hit != by_key.end()) return hit->second;
    for (int depth : {0, zigzag, 2 * zigzag + s.pad_total(), 4 * zigzag + 2 * s.pad_total()}) {
      int h = classify(index_mor, from, to, s, depth);
      if (h >= 0) return h;
    }
    return -1;
  }

  // composition table on class representatives, saturated under composition:
  // a composite whose class was not reached at the generation bound is kept
  // as a new representative, then the table is re-closed over it
  RawCategory raw(const std::function<int(int, int)>& compose_index) {
    std::map<std::pair<size_t, size_t>, size_t> table;
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t g = 0; g < mors.size(); ++g)
        for (size_t f = 0; f < mors.size(); ++f) {
          if (mors[f].to != mors[g].from) continue;
          if (table.count({g, f})) continue;
          int ci = compose_index(static_cast<int>(g), static_cast<int>(f));
          PathSpan comp = compose_spans(mors[g].span, mors[f].span);
          int h = classify_escalating(ci, mors[f].from, mors[g].to, comp);
          if (h < 0) {
            std::ostringstream name;
            name << objs[mors[f].from].name << ">" << objs[mors[g].to].name << "#" << ci << "#s"
                 << mors.size();
            by_key[cell_key(ci, mors[f].from, mors[g].to, comp)] = static_cast<int>(mors.size());
            mors.push_back({name.str(), ci, mors[f].from, mors[g].to, comp});
            if (static_cast<long long>(mors.size()) > cap)
              throw BudgetExceeded("path category morphism budget exhausted", -1,
                                   static_cast<long long>(mors.size()));
            h = static_cast<int>(mors.size()) - 1;
            grew = true;
          }
          table[{g, f}] = static_cast<size_t>(h);
        }
    }
    RawCategory raw;
    for (const Obj& o : objs) raw.objects.push_back(o.name);
    for (const Mor& m : mors)
      raw.morphisms.push_back({m.name, objs[m.from].name, objs[m.to].name});
    for (size_t i = 0; i < objs.size(); ++i) {
      int id = classify_escalating(/*index_mor=*/compose_index(-1, static_cast<int>(i)),
                                   static_cast<int>(i), static_cast<int>(i),
                                   identity_span(objs[i].path));
      if (id < 0)
        throw CatError(CatErrorKind::IdentityLawViolation,
                       "identity class missing for a path object");
      raw.identities[objs[i].name] = mors[id].name;
    }
    for (const auto& [gf, h] : table)
      raw.compose.push_back({mors[gf.first].name, mors[gf.second].name, mors[h].name});
    return raw;
  }
};

}  // namespace

int TruncatedPathCat::object_of(const Path& p) const {
  for (size_t i = 0; i < obj_paths.size(); ++i)
    if (obj_paths[i] == p) return static_cast<int>(i);
  return -1;
}

int TruncatedPathCat::morphism_of(const PathSpan& s, int depth) const {
  for (size_t i = 0; i < mor_spans.size(); ++i)
    if (spans_equal(s, mor_spans[i], depth)) return static_cast<int>(i);
  return -1;
}

TruncatedPathCat truncated_path_category(const FinCatPtr& base, int max_len, int zigzag,
                                         long long cap) {
  TruncatedPathCat out;
  out.base = base;
  out.max_len = max_len;
  out.zigzag = zigzag;
  out.base_sq = product(base, base);

  Builder b{base, zigzag, cap, {}, {}};
  for (const Path& p : enumerate_reduced_paths(base, max_len)) b.add_object(obj_tag("", p), 0, p);
  for (size_t i = 0; i < b.objs.size(); ++i)
    for (size_t j = 0; j < b.objs.size(); ++j)
      b.add_classes(0, static_cast<int>(i), static_cast<int>(j), EndpointConstraint{});
  RawCategory raw = b.raw([](int, int) { return 0; });
  out.cat = validate_category(raw);

  // the validator re-sorts; recover the object/morphism payloads by name
  out.obj_paths.resize(b.objs.size());
  for (const Builder::Obj& o : b.objs) out.obj_paths[out.cat->object_index(o.name)] = o.path;
  out.mor_spans.resize(b.mors.size());
  for (const Builder::Mor& m : b.mors) out.mor_spans[out.cat->morphism_index(m.name)] = m.span;

  out.endpoint.source = out.cat;
  out.endpoint.target = out.base_sq.cat;
  for (const Path& p : out.obj_paths)
    out.endpoint.obj_map.push_back(out.base_sq.obj_of(p.start(), p.end()));
  for (const PathSpan& s : out.mor_spans)
    out.endpoint.mor_map.push_back(out.base_sq.mor_of(s.comp_at_start(), s.comp_at_end()));
  check_functor(out.endpoint);
  return out;
}

namespace {

PathPullback build_pullback(const Functor& f, const Functor* g, int max_len, int zigzag,
                            long long cap) {
  PathPullback out;
  out.base = f.target;
  out.index = f.source;
  out.max_len = max_len;
  out.zigzag = zigzag;
  out.end_constrained = g != nullptr;
  const FinCat& c = *out.index;

  Builder b{out.base, zigzag, cap, {}, {}};
  for (int o = 0; o < c.num_objects(); ++o)
    for (const Path& p : enumerate_reduced_paths(out.base, max_len, f.obj_map[o],
                                                 g ? g->obj_map[o] : -1))
      b.add_object(obj_tag(c.obj_names[o], p), o, p);
  for (int m = 0; m < c.num_morphisms(); ++m)
    for (size_t i = 0; i < b.objs.size(); ++i)
      for (size_t j = 0; j < b.objs.size(); ++j) {
        if (b.objs[i].index_obj != c.dom[m] || b.objs[j].index_obj != c.cod[m]) continue;
        EndpointConstraint ec{f.mor_map[m], g ? g->mor_map[m] : -1};
        b.add_classes(m, static_cast<int>(i), static_cast<int>(j), ec);
      }
  RawCategory raw = b.raw([&](int gi, int fi) {
    if (gi < 0) return c.identity[b.objs[fi].index_obj];
    return c.compose(b.mors[gi].index_mor, b.mors[fi].index_mor);
  });
  out.cat = validate_category(raw);

  out.obj_index.resize(b.objs.size());
  out.obj_paths.resize(b.objs.size());
  for (const Builder::Obj& o : b.objs) {
    int i = out.cat->object_index(o.name);
    out.obj_index[i] = o.index_obj;
    out.obj_paths[i] = o.path;
  }
  out.mor_index.resize(b.mors.size());
  out.mor_spans.resize(b.mors.size());
  for (const Builder::Mor& m : b.mors) {
    int i = out.cat->morphism_index(m.name);
    out.mor_index[i] = m.index_mor;
    out.mor_spans[i] = m.span;
  }

  out.proj.source = out.cat;
  out.proj.target = out.index;
  out.proj.obj_map = out.obj_index;
  out.proj.mor_map = out.mor_index;
  check_functor(out.proj);
  return out;
}

}  // namespace

int PathPullback::object_of(int c, const Path& p) const {
  for (size_t i = 0; i < obj_paths.size(); ++i)
    if (obj_index[i] == c && obj_paths[i] == p) return static_cast<int>(i);
  return -1;
}

int PathPullback::morphism_of(int f, const PathSpan& s, int depth) const {
  for (size_t i = 0; i < mor_spans.size(); ++i) {
    if (mor_index[i] != f) continue;
    if (!(mor_spans[i].source == s.source) || !(mor_spans[i].target == s.target)) continue;
    if (spans_equal(s, mor_spans[i], depth)) return static_cast<int>(i);
  }
  return -1;
}

PathPullback path_pullback(const Functor& f, const Functor& g, int max_len, int zigzag,
                           long long cap) {
  if (f.source != g.source || f.target != g.target)
    throw CatError(CatErrorKind::BadInput, "pullback needs parallel functors");
  return build_pullback(f, &g, max_len, zigzag, cap);
}

PathPullback initial_path_pullback(const Functor& f, int max_len, int zigzag, long long cap) {
  return build_pullback(f, nullptr, max_len, zigzag, cap);
}

}  // namespace cathom
