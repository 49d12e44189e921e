#include "cathom/paths.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace cathom {

namespace {

// forward at even indices, backward at odd
bool arrow_forward(int i) { return i % 2 == 0; }

void require(bool ok, CatErrorKind kind, const std::string& msg) {
  if (!ok) throw CatError(kind, msg);
}

}  // namespace

Path Path::constant(const FinCatPtr& base, int obj, int length) {
  Path p;
  p.base = base;
  p.objects.assign(length + 1, obj);
  p.arrows.assign(length, base->identity[obj]);
  return p;
}

std::string Path::literal() const {
  std::ostringstream os;
  os << "[" << base->obj_names[objects[0]];
  for (size_t i = 0; i < arrows.size(); ++i)
    os << "|" << base->mor_names[arrows[i]] << "|" << base->obj_names[objects[i + 1]];
  os << "]";
  return os.str();
}

size_t PathHash::operator()(const Path& p) const {
  size_t h = std::hash<const FinCat*>()(p.base.get());
  auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int o : p.objects) mix(static_cast<size_t>(o) * 2 + 1);
  for (int a : p.arrows) mix(static_cast<size_t>(a) * 2);
  return h;
}

Path path_from_literal(const FinCatPtr& base, const std::vector<std::string>& literal) {
  require(!literal.empty() && literal.size() % 2 == 1, CatErrorKind::BadInput,
          "path literal must alternate object, morphism, object, ...");
  Path p;
  p.base = base;
  p.objects.push_back(base->object_index(literal[0]));
  for (size_t i = 1; i < literal.size(); i += 2) {
    p.arrows.push_back(base->morphism_index(literal[i]));
    p.objects.push_back(base->object_index(literal[i + 1]));
  }
  check_path(p);
  return p;
}

void check_path(const Path& p) {
  require(p.base != nullptr, CatErrorKind::BadInput, "path has no base category");
  require(p.objects.size() == p.arrows.size() + 1, CatErrorKind::ShapeMismatch,
          "path needs one more object than arrows");
  const FinCat& c = *p.base;
  for (size_t i = 0; i < p.objects.size(); ++i)
    require(p.objects[i] >= 0 && p.objects[i] < c.num_objects(), CatErrorKind::DanglingId,
            "path object out of range");
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    int a = p.arrows[i];
    require(a >= 0 && a < c.num_morphisms(), CatErrorKind::DanglingId, "path arrow out of range");
    int from = arrow_forward(static_cast<int>(i)) ? p.objects[i] : p.objects[i + 1];
    int to = arrow_forward(static_cast<int>(i)) ? p.objects[i + 1] : p.objects[i];
    require(c.dom[a] == from && c.cod[a] == to, CatErrorKind::ShapeMismatch,
            "path arrow " + c.mor_names[a] + " does not fit its slot");
  }
}

bool is_reduced(const Path& p) {
  if (p.length() % 2 != 0) return false;
  for (int i = 0; i + 1 < p.length(); ++i)
    if (p.base->is_identity(p.arrows[i]) && p.base->is_identity(p.arrows[i + 1])) return false;
  return true;
}

Path normalize_path(const Path& p) {
  check_path(p);
  Path q = p;
  if (q.length() % 2 != 0) {  // right-pad by a (backward) identity
    q.objects.push_back(q.objects.back());
    q.arrows.push_back(q.base->identity[q.objects.back()]);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < q.length(); ++i) {
      if (q.base->is_identity(q.arrows[i]) && q.base->is_identity(q.arrows[i + 1])) {
        q.objects.erase(q.objects.begin() + i + 1, q.objects.begin() + i + 3);
        q.arrows.erase(q.arrows.begin() + i, q.arrows.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return q;
}

Path reverse_path(const Path& p) {
  require(p.length() % 2 == 0, CatErrorKind::ShapeMismatch, "reverse needs even length");
  Path q;
  q.base = p.base;
  q.objects.assign(p.objects.rbegin(), p.objects.rend());
  q.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
  check_path(q);
  return q;
}

Path concat_paths(const Path& p, const Path& q) {
  require(p.base == q.base, CatErrorKind::BadInput, "concat across categories");
  require(p.length() % 2 == 0, CatErrorKind::ShapeMismatch, "concat needs even left length");
  require(p.end() == q.start(), CatErrorKind::EndpointMismatch,
          "concat endpoints do not match");
  Path r = p;
  r.objects.insert(r.objects.end(), q.objects.begin() + 1, q.objects.end());
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  check_path(r);
  return r;
}

std::pair<int, int> endpoints(const Path& p) { return {p.start(), p.end()}; }

Reparam Reparam::identity(int m) {
  Reparam f;
  f.map.resize(m + 1);
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

bool valid_reparam(const Reparam& f) {
  if (f.map.empty() || f.map[0] != 0) return false;
  for (size_t i = 0; i + 1 < f.map.size(); ++i) {
    int step = f.map[i + 1] - f.map[i];
    if (step != 0 && step != 1) return false;
    // a kept generator must land on one of the same orientation
    if (step == 1 && (f.map[i] % 2) != (static_cast<int>(i) % 2)) return false;
  }
  return true;
}

Reparam compose_reparams(const Reparam& g, const Reparam& f) {
  require(f.target_length() == g.source_length(), CatErrorKind::ShapeMismatch,
          "reparam composition length mismatch");
  Reparam h;
  h.map.reserve(f.map.size());
  for (int v : f.map) h.map.push_back(g.map[v]);
  return h;
}

std::vector<Reparam> enumerate_reparams(int m, int n) {
  std::vector<Reparam> out;
  if ((m - n) % 2 != 0 || m < n || m < 0 || n < 0) return out;
  std::vector<int> cur(1, 0);
  std::function<void()> rec = [&]() {
    int i = static_cast<int>(cur.size()) - 1;
    if (i == m) {
      if (cur.back() == n) {
        Reparam f;
        f.map = cur;
        out.push_back(std::move(f));
      }
      return;
    }
    if (cur.back() + (m - i) < n) return;  // cannot still reach n
    cur.push_back(cur.back());
    rec();
    cur.pop_back();
    if (cur.back() < n && (cur.back() % 2) == (i % 2)) {
      cur.push_back(cur.back() + 1);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

bool check_path_morphism_inner(const PathMorphism& m, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (m.from.base != m.to.base) return fail("different base categories");
  const FinCat& c = *m.from.base;
  if (!valid_reparam(m.reparam)) return fail("invalid reparameterization");
  if (m.reparam.source_length() != m.from.length() || m.reparam.target_length() != m.to.length())
    return fail("reparam lengths do not match the paths");
  if (m.components.size() != m.from.objects.size()) return fail("component count mismatch");
  for (size_t i = 0; i < m.components.size(); ++i) {
    int a = m.components[i];
    if (a < 0 || a >= c.num_morphisms()) return fail("component out of range");
    if (c.dom[a] != m.from.objects[i] || c.cod[a] != m.to.objects[m.reparam(static_cast<int>(i))])
      return fail("component endpoints mismatch at position " + std::to_string(i));
  }
  for (int i = 0; i < m.from.length(); ++i) {
    int fi = m.reparam(i), fi1 = m.reparam(i + 1);
    int t = fi == fi1 ? c.identity[m.to.objects[fi]] : m.to.arrows[std::min(fi, fi1)];
    int a = m.from.arrows[i];
    if (arrow_forward(i)) {
      if (c.compose(m.components[i + 1], a) != c.compose(t, m.components[i]))
        return fail("naturality fails at forward generator " + std::to_string(i));
    } else {
      if (c.compose(m.components[i], a) != c.compose(t, m.components[i + 1]))
        return fail("naturality fails at backward generator " + std::to_string(i));
    }
  }
  return true;
}

bool check_path_morphism(const PathMorphism& m) { return check_path_morphism_inner(m, nullptr); }

PathMorphism identity_path_morphism(const Path& p) {
  PathMorphism m;
  m.from = m.to = p;
  m.reparam = Reparam::identity(p.length());
  for (int o : p.objects) m.components.push_back(p.base->identity[o]);
  return m;
}

PathMorphism compose_path_morphisms(const PathMorphism& g, const PathMorphism& f) {
  require(f.to == g.from, CatErrorKind::ShapeMismatch, "path morphism composition mismatch");
  PathMorphism h;
  h.from = f.from;
  h.to = g.to;
  h.reparam = compose_reparams(g.reparam, f.reparam);
  const FinCat& c = *f.from.base;
  for (size_t i = 0; i < f.components.size(); ++i)
    h.components.push_back(c.compose(g.components[f.reparam(static_cast<int>(i))],
                                     f.components[i]));
  return h;
}

namespace {

// DFS over components for one fixed reparameterization.
void direct_search(const Path& from, const Path& to, const Reparam& f, EndpointConstraint ec,
                   size_t cap, std::vector<PathMorphism>& out) {
  const FinCat& c = *from.base;
  int m = from.length();
  std::vector<int> comp(m + 1, -1);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == m + 1) {
      PathMorphism pm;
      pm.from = from;
      pm.to = to;
      pm.reparam = f;
      pm.components = comp;
      out.push_back(std::move(pm));
      return out.size() >= cap;
    }
    const std::vector<int>& cands = c.hom(from.objects[i], to.objects[f(i)]);
    for (int a : cands) {
      if (i == 0 && ec.at_start >= 0 && a != ec.at_start) continue;
      if (i == m && ec.at_end >= 0 && a != ec.at_end) continue;
      if (i > 0) {  // naturality of the square over generator i-1
        int g = i - 1;
        int fg = f(g), fg1 = f(g + 1);
        int t = fg == fg1 ? c.identity[to.objects[fg]] : to.arrows[std::min(fg, fg1)];
        if (arrow_forward(g)) {
          if (c.compose(a, from.arrows[g]) != c.compose(t, comp[g])) continue;
        } else {
          if (c.compose(comp[g], from.arrows[g]) != c.compose(t, a)) continue;
        }
      }
      comp[i] = a;
      if (rec(i + 1)) return true;
      comp[i] = -1;
    }
    return false;
  };
  rec(0);
}

}  // namespace

std::vector<PathMorphism> direct_morphisms(const Path& from, const Path& to,
                                           EndpointConstraint ec, size_t cap) {
  require(from.base == to.base, CatErrorKind::BadInput, "paths in different categories");
  std::vector<PathMorphism> out;
  for (const Reparam& f : enumerate_reparams(from.length(), to.length())) {
    direct_search(from, to, f, ec, cap, out);
    if (out.size() >= cap) break;
  }
  return out;
}

Path padded_path(const Path& p, const std::vector<int>& counts) {
  require(counts.size() == p.objects.size(), CatErrorKind::ShapeMismatch,
          "one pad count per object position");
  Path q;
  q.base = p.base;
  for (size_t i = 0; i < p.objects.size(); ++i) {
    int id = p.base->identity[p.objects[i]];
    for (int k = 0; k < 2 * counts[i] + 1; ++k) {
      q.objects.push_back(p.objects[i]);
      if (k > 0) q.arrows.push_back(id);
    }
    q.objects.pop_back();  // keep exactly one trailing copy per position
    if (i + 1 < p.objects.size()) {
      q.objects.push_back(p.objects[i]);
      q.arrows.push_back(p.arrows[i]);
    } else {
      q.objects.push_back(p.objects[i]);
    }
  }
  check_path(q);
  return q;
}

Reparam padding_collapse(const Path& p, const std::vector<int>& counts) {
  Reparam f;
  for (size_t i = 0; i < p.objects.size(); ++i)
    for (int k = 0; k < 2 * counts[i] + 1; ++k) f.map.push_back(static_cast<int>(i));
  return f;
}

std::vector<std::vector<int>> enumerate_pad_counts(int positions, int max_pairs) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(positions, 0);
  for (int total = 0; total <= max_pairs; ++total) {
    std::function<void(int, int)> exact = [&](int pos, int left) {
      if (pos == positions) {
        if (left == 0) out.push_back(cur);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        cur[pos] = k;
        exact(pos + 1, left - k);
        cur[pos] = 0;
      }
    };
    exact(0, total);
  }
  return out;
}

int PathSpan::pad_total() const { return std::accumulate(pad_counts.begin(), pad_counts.end(), 0); }

std::string PathSpan::key() const {
  std::ostringstream os;
  os << pad_total() << ";";
  for (int k : pad_counts) os << k << ",";
  os << ";";
  for (int v : leg.reparam.map) os << v << ",";
  os << ";";
  for (int a : leg.components) os << a << ",";
  return os.str();
}

bool check_span(const PathSpan& s) {
  if (s.pad_counts.size() != s.source.objects.size()) return false;
  if (!(s.leg.from == padded_path(s.source, s.pad_counts))) return false;
  if (!(s.leg.to == s.target)) return false;
  return check_path_morphism(s.leg);
}

PathSpan identity_span(const Path& p) { return span_from_direct(identity_path_morphism(p)); }

PathSpan span_from_direct(const PathMorphism& m) {
  PathSpan s;
  s.source = m.from;
  s.target = m.to;
  s.pad_counts.assign(m.from.objects.size(), 0);
  s.leg = m;
  return s;
}

namespace {

// W-collapses K' -> K over the same underlying path, compatible with the two
// collapse reparams to the common source.
std::vector<Reparam> collapse_factorizations(const Path& kprime, const Path& k,
                                             const Reparam& gprime, const Reparam& g) {
  std::vector<Reparam> out;
  int m = kprime.length(), n = k.length();
  if ((m - n) % 2 != 0 || m < n) return out;
  std::vector<int> cur(1, 0);
  // direct DFS with incremental constraints instead of filtering the full
  // reparam enumeration: each prefix must already factor the two collapses
  // and match objects, which prunes almost every branch immediately
  std::function<void()> rec = [&]() {
    int i = static_cast<int>(cur.size()) - 1;
    int v = cur.back();
    if (kprime.objects[i] != k.objects[v]) return;
    if (g.map[v] != gprime.map[i]) return;
    if (v + (m - i) < n) return;  // cannot still reach n
    if (i == m) {
      if (v == n) {
        Reparam u;
        u.map = cur;
        if (valid_reparam(u)) out.push_back(std::move(u));
      }
      return;
    }
    cur.push_back(v);
    rec();
    cur.pop_back();
    if (v < n && (v % 2) == (i % 2)) {
      cur.push_back(v + 1);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

PathMorphism reindex_leg(const PathMorphism& leg, const Path& kprime, const Reparam& u) {
  PathMorphism m;
  m.from = kprime;
  m.to = leg.to;
  m.reparam = compose_reparams(leg.reparam, u);
  for (size_t i = 0; i < kprime.objects.size(); ++i)
    m.components.push_back(leg.components[u(static_cast<int>(i))]);
  return m;
}

}  // namespace

bool spans_equal(const PathSpan& a, const PathSpan& b, int extra_depth) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  // the leg components at the two ends survive every refinement reindexing
  if (a.comp_at_start() != b.comp_at_start() || a.comp_at_end() != b.comp_at_end()) return false;
  size_t n = a.pad_counts.size();
  std::vector<int> floor(n);
  for (size_t i = 0; i < n; ++i) floor[i] = std::max(a.pad_counts[i], b.pad_counts[i]);
  Path ka = a.apex(), kb = b.apex();
  Reparam ga = padding_collapse(a.source, a.pad_counts);
  Reparam gb = padding_collapse(b.source, b.pad_counts);
  int na = ka.length(), nb = kb.length();
  // equality at a refinement persists at every pointwise-larger refinement, so
  // uniform extra padding at full depth dominates all smaller distributions;
  // depth 0 first as the fast path
  for (int d = 0; d <= extra_depth; d += std::max(extra_depth, 1)) {
    std::vector<int> counts(n);
    for (size_t i = 0; i < n; ++i) counts[i] = floor[i] + d;
    Path kp = padded_path(a.source, counts);
    Reparam gp = padding_collapse(a.source, counts);
    int m = kp.length();
    // joint search for a pair of compatible collapse factorizations whose
    // reindexed legs agree, pruned positionwise and memoized on dead states
    std::vector<char> dead(static_cast<size_t>(m + 1) * (na + 1) * (nb + 1), 0);
    std::function<bool(int, int, int)> dfs = [&](int i, int va, int vb) -> bool {
      if (kp.objects[i] != ka.objects[va] || kp.objects[i] != kb.objects[vb]) return false;
      if (ga.map[va] != gp.map[i] || gb.map[vb] != gp.map[i]) return false;
      if (a.leg.components[va] != b.leg.components[vb]) return false;
      if (a.leg.reparam.map[va] != b.leg.reparam.map[vb]) return false;
      if (va + (m - i) < na || vb + (m - i) < nb) return false;
      if (i == m) return va == na && vb == nb;
      size_t cell = (static_cast<size_t>(i) * (na + 1) + va) * (nb + 1) + vb;
      if (dead[cell]) return false;
      bool adv_a = va < na && (va % 2) == (i % 2);
      bool adv_b = vb < nb && (vb % 2) == (i % 2);
      for (int da = 0; da <= (adv_a ? 1 : 0); ++da)
        for (int db = 0; db <= (adv_b ? 1 : 0); ++db)
          if (dfs(i + 1, va + da, vb + db)) return true;
      dead[cell] = 1;
      return false;
    };
    if (dfs(0, 0, 0)) return true;
  }
  return false;
}

PathSpan reduce_span(const PathSpan& s) {
  PathSpan r = s;
  bool changed = true;
  while (changed) {
    changed = false;
    // apex run of source position i starts after i plus two slots per
    // earlier bounce pair
    int base = 0;
    for (size_t i = 0; i < r.pad_counts.size() && !changed; ++i) {
      int run_end = base + 2 * r.pad_counts[i];
      for (int t = base; r.pad_counts[i] > 0 && t + 2 <= run_end && !changed; ++t) {
        // drop the bounce pair (t+1, t+2) when the leg is constant across it
        if (r.leg.reparam.map[t] != r.leg.reparam.map[t + 1] ||
            r.leg.reparam.map[t] != r.leg.reparam.map[t + 2])
          continue;
        if (r.leg.components[t] != r.leg.components[t + 1] ||
            r.leg.components[t] != r.leg.components[t + 2])
          continue;
        r.leg.reparam.map.erase(r.leg.reparam.map.begin() + t + 1,
                                r.leg.reparam.map.begin() + t + 3);
        r.leg.components.erase(r.leg.components.begin() + t + 1,
                               r.leg.components.begin() + t + 3);
        r.leg.from.objects.erase(r.leg.from.objects.begin() + t + 1,
                                 r.leg.from.objects.begin() + t + 3);
        r.leg.from.arrows.erase(r.leg.from.arrows.begin() + t, r.leg.from.arrows.begin() + t + 2);
        r.pad_counts[i] -= 1;
        changed = true;
      }
      base = run_end + 1;
    }
  }
  return r;
}

PathSpan compose_spans(const PathSpan& second, const PathSpan& first) {
  require(first.target == second.source, CatErrorKind::ShapeMismatch,
          "span composition endpoint mismatch");
  Path k1 = first.apex();
  const Reparam& f1 = first.leg.reparam;
  // pull the second padding back along the first leg: each bounce at target
  // position p is inserted at the earliest apex position over p
  std::vector<int> d(k1.objects.size(), 0);
  for (size_t p = 0; p < second.pad_counts.size(); ++p) {
    if (second.pad_counts[p] == 0) continue;
    for (size_t i = 0; i < k1.objects.size(); ++i)
      if (f1(static_cast<int>(i)) == static_cast<int>(p)) {
        d[i] += second.pad_counts[p];
        break;
      }
  }
  Path kprime = padded_path(k1, d);
  Reparam v = padding_collapse(k1, d);  // kprime -> k1
  // psi : kprime -> second.apex(), tracking blocks on both sides
  Path k2 = second.apex();
  std::vector<int> block_start(second.pad_counts.size());
  for (size_t p = 0, pos = 0; p < second.pad_counts.size(); ++p) {
    block_start[p] = static_cast<int>(pos);
    pos += 2 * second.pad_counts[p] + 1;
  }
  PathMorphism psi;
  psi.from = kprime;
  psi.to = k2;
  {
    std::vector<int> seen_at(k1.objects.size(), 0);  // copies of each k1 position emitted
    for (size_t j = 0; j < kprime.objects.size(); ++j) {
      int i = v(static_cast<int>(j));
      int p = f1(i);
      bool earliest = true;
      for (int i2 = 0; i2 < i; ++i2)
        if (f1(i2) == p) earliest = false;
      int slot;
      if (earliest)
        slot = block_start[p] + seen_at[i];
      else
        slot = block_start[p] + 2 * second.pad_counts[p];
      seen_at[i]++;
      psi.reparam.map.push_back(slot);
      psi.components.push_back(first.leg.components[i]);
    }
  }
  std::string why;
  if (!check_path_morphism_inner(psi, &why))
    throw CatError(CatErrorKind::ShapeMismatch, "span composition leg transport failed: " + why);
  PathSpan out;
  out.source = first.source;
  out.target = second.target;
  out.pad_counts = first.pad_counts;
  {  // aggregate the inserted bounces back to source positions
    Reparam g1 = padding_collapse(first.source, first.pad_counts);
    for (size_t i = 0; i < d.size(); ++i) out.pad_counts[g1(static_cast<int>(i))] += d[i];
  }
  out.leg = compose_path_morphisms(second.leg, psi);
  if (!check_span(out))
    throw CatError(CatErrorKind::ShapeMismatch, "span composition produced an invalid span");
  return reduce_span(out);
}

FindResult find_path_morphism(const Path& from, const Path& to, int zigzag_bound,
                              EndpointConstraint ec) {
  for (const std::vector<int>& counts :
       enumerate_pad_counts(static_cast<int>(from.objects.size()), zigzag_bound)) {
    Path apex = padded_path(from, counts);
    std::vector<PathMorphism> found = direct_morphisms(apex, to, ec, 1);
    if (!found.empty()) {
      PathSpan s;
      s.source = from;
      s.target = to;
      s.pad_counts = counts;
      s.leg = found[0];
      return {SearchVerdict::Found, s};
    }
  }
  return {SearchVerdict::AbsentWithinBound, std::nullopt};
}

FindResult find_path_morphism_strict(const Path& from, const Path& to) {
  Path a = normalize_path(from), b = normalize_path(to);
  // stabilize to a common length by constant right-padding
  auto right_pad = [](const Path& p, int target_len) {
    std::vector<int> counts(p.objects.size(), 0);
    counts.back() = (target_len - p.length()) / 2;
    return padded_path(p, counts);
  };
  int len = std::max(a.length(), b.length());
  a = right_pad(a, len);
  b = right_pad(b, len);
  std::vector<PathMorphism> out;
  direct_search(a, b, Reparam::identity(len), EndpointConstraint{}, 1, out);
  if (out.empty()) return {SearchVerdict::AbsentExhaustive, std::nullopt};
  return {SearchVerdict::Found, span_from_direct(out[0])};
}

std::vector<PathSpan> hom_span_classes(const Path& from, const Path& to, int zigzag_bound,
                                       EndpointConstraint ec, size_t cap) {
  std::vector<PathSpan> all;
  std::set<std::string> seen;
  for (const std::vector<int>& counts :
       enumerate_pad_counts(static_cast<int>(from.objects.size()), zigzag_bound)) {
    Path apex = padded_path(from, counts);
    for (PathMorphism& m : direct_morphisms(apex, to, ec)) {
      PathSpan s;
      s.source = from;
      s.target = to;
      s.pad_counts = counts;
      s.leg = std::move(m);
      // a reducible candidate equals its reduced form, which is enumerated at
      // smaller padding, so only irreducible candidates need classifying
      if (reduce_span(s).pad_counts != s.pad_counts) continue;
      if (!seen.insert(s.key()).second) continue;
      all.push_back(std::move(s));
      if (all.size() > cap)
        throw BudgetExceeded("too many localized morphisms between paths",
                             static_cast<long long>(cap));
    }
  }
  // group by localized equality, keep the least key of each class
  std::vector<int> cls(all.size(), -1);
  std::vector<PathSpan> reps;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t r = 0; r < reps.size() && cls[i] < 0; ++r)
      if (spans_equal(all[i], reps[r], zigzag_bound)) {
        cls[i] = static_cast<int>(r);
        if (all[i].key() < reps[r].key()) reps[r] = all[i];
      }
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(all[i]);
    }
  }
  std::sort(reps.begin(), reps.end(),
            [](const PathSpan& x, const PathSpan& y) { return x.key() < y.key(); });
  return reps;
}

std::vector<Path> enumerate_reduced_paths(const FinCatPtr& base, int max_len, int start_obj,
                                          int end_obj) {
  std::vector<Path> out;
  const FinCat& c = *base;
  Path cur;
  cur.base = base;
  std::function<void()> rec = [&]() {
    int len = cur.length();
    if (len % 2 == 0 && (end_obj < 0 || cur.end() == end_obj)) out.push_back(cur);
    if (len == max_len) return;
    int tip = cur.objects.back();
    bool prev_id = len > 0 && c.is_identity(cur.arrows.back());
    for (int a = 0; a < c.num_morphisms(); ++a) {
      bool fwd = arrow_forward(len);
      if (fwd ? c.dom[a] != tip : c.cod[a] != tip) continue;
      if (prev_id && c.is_identity(a)) continue;
      cur.arrows.push_back(a);
      cur.objects.push_back(fwd ? c.cod[a] : c.dom[a]);
      rec();
      cur.arrows.pop_back();
      cur.objects.pop_back();
    }
  };
  for (int o = 0; o < c.num_objects(); ++o) {
    if (start_obj >= 0 && o != start_obj) continue;
    cur.objects.assign(1, o);
    rec();
  }
  return out;
}

}  // namespace cathom
