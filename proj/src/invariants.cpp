#include "cathom/invariants.hpp"

#include <algorithm>
#include <functional>

namespace cathom {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Weak: return "weak";
    case Mode::Strong: return "strong";
    default: return "strict";
  }
}

nlohmann::json InvariantResult::to_json() const {
  nlohmann::json j;
  j["invariant"] = name;
  j["mode"] = mode_name(mode);
  if (kind == Value)
    j["value"] = value;
  else if (kind == Infinite)
    j["value"] = "infinity";
  else
    j["value"] = nlohmann::json{{"unknown_at_least", lower}};
  j["certificate"] = certificate;
  j["budget_exhausted"] = budget_exhausted;
  return j;
}

nlohmann::json piece_to_json(const Subcategory& s) {
  nlohmann::json j;
  j["objects"] = nlohmann::json::array();
  j["morphisms"] = nlohmann::json::array();
  for (size_t o = 0; o < s.objects.size(); ++o)
    if (s.objects[o]) j["objects"].push_back(s.parent->obj_names[o]);
  for (size_t m = 0; m < s.morphisms.size(); ++m)
    if (s.morphisms[m]) j["morphisms"].push_back(s.parent->mor_names[m]);
  return j;
}

Subcategory piece_from_json(const FinCatPtr& c, const nlohmann::json& j) {
  Subcategory s;
  s.parent = c;
  s.objects.assign(c->num_objects(), 0);
  s.morphisms.assign(c->num_morphisms(), 0);
  for (const auto& o : j.at("objects")) s.objects[c->object_index(o.get<std::string>())] = 1;
  for (const auto& m : j.at("morphisms")) s.morphisms[c->morphism_index(m.get<std::string>())] = 1;
  return s;
}

bool revalidate_cover_certificate(const FinCatPtr& c, const nlohmann::json& certificate,
                                  int value) {
  if (!certificate.contains("pieces")) return false;
  std::vector<Subcategory> pieces;
  for (const auto& pj : certificate.at("pieces")) pieces.push_back(piece_from_json(c, pj));
  if (static_cast<int>(pieces.size()) != value + 1) return false;
  for (const Subcategory& p : pieces)
    if (!check_subcategory(p)) return false;
  return !is_geometric_cover(c, pieces).has_value();
}

namespace {

nlohmann::json functor_tables_json(const Functor& f) {
  nlohmann::json j;
  for (int o = 0; o < f.source->num_objects(); ++o)
    j["objects"][f.source->obj_names[o]] = f.target->obj_names[f.obj_map[o]];
  for (int m = 0; m < f.source->num_morphisms(); ++m)
    j["morphisms"][f.source->mor_names[m]] = f.target->mor_names[f.mor_map[m]];
  return j;
}

nlohmann::json homotopy_json(const StrongHomotopy& h) {
  nlohmann::json j;
  j["stages"] = nlohmann::json::array();
  for (const Functor& s : h.stages) j["stages"].push_back(functor_tables_json(s));
  j["links"] = nlohmann::json::array();
  for (size_t i = 0; i < h.links.size(); ++i) {
    nlohmann::json l;
    l["dir"] = i % 2 == 0 ? "fwd" : "bwd";
    for (size_t o = 0; o < h.links[i].components.size(); ++o)
      l["components"][h.links[i].from.source->obj_names[o]] =
          h.links[i].from.target->mor_names[h.links[i].components[o]];
    j["links"].push_back(l);
  }
  return j;
}

InvariantResult from_outcome(const std::string& name, Mode mode,
                             const CoverSearchOutcome& out) {
  InvariantResult r;
  r.name = name;
  r.mode = mode;
  if (out.kind == CoverSearchOutcome::Found) {
    r.kind = InvariantResult::Value;
    r.value = out.n;
    r.certificate["n"] = out.n;
    r.certificate["pieces"] = nlohmann::json::array();
    for (const Subcategory& p : out.pieces) r.certificate["pieces"].push_back(piece_to_json(p));
    r.certificate["witnesses"] = out.witnesses;
  } else if (out.kind == CoverSearchOutcome::Infinite) {
    r.kind = InvariantResult::Infinite;
    r.certificate["infinite"] = "no geometric cover by qualifying pieces exists";
  } else {
    r.kind = InvariantResult::Unknown;
    r.lower = out.lower;
    r.budget_exhausted = true;
  }
  return r;
}

CoverBudget cover_budget(const Budgets& b) {
  CoverBudget cb;
  cb.piece_budget = b.piece_budget;
  cb.cover_budget = b.cover_budget;
  return cb;
}

// component of a functor in the homotopy graph, or -1 when not enumerated
int graph_component_of(const FunctorGraph& g, const std::vector<int>& comp, const Functor& f) {
  for (size_t i = 0; i < g.functors.size(); ++i)
    if (g.functors[i] == f) return comp[i];
  return -1;
}

InvariantResult ccat_connected(const FinCatPtr& c, Mode mode, const Budgets& b) {
  PiecePredicate pred = [&](const Subcategory& piece) -> std::optional<nlohmann::json> {
    auto [realized, incl] = realize_subcategory(piece);
    FunctorGraph g = build_functor_graph(realized, c, b.functor_cap);
    std::vector<int> comp = graph_components(g);
    int ci = graph_component_of(g, comp, incl);
    for (int o = 0; o < c->num_objects(); ++o) {
      Functor k = constant_functor(realized, c, o);
      if (graph_component_of(g, comp, k) == ci) {
        std::optional<StrongHomotopy> h = strong_homotopic(incl, k, b.functor_cap);
        nlohmann::json w;
        w["constant_at"] = c->obj_names[o];
        w["homotopy"] = homotopy_json(*h);
        return w;
      }
    }
    return std::nullopt;
  };
  return from_outcome("ccat", mode, minimal_cover_search(c, pred, cover_budget(b)));
}

}  // namespace

InvariantResult ccat(const FinCatPtr& c, Mode mode, const Budgets& b) {
  std::vector<std::vector<int>> comps = connected_components(c);
  if (comps.size() == 1) return ccat_connected(c, mode, b);
  // extension beyond the connected case: per component plus aggregation
  InvariantResult r;
  r.name = "ccat";
  r.mode = mode;
  r.kind = InvariantResult::Value;
  r.value = static_cast<int>(comps.size()) - 1;
  r.certificate["components"] = nlohmann::json::array();
  for (const std::vector<int>& comp : comps) {
    auto [realized, incl] = realize_subcategory(full_subcategory(c, comp));
    (void)incl;
    InvariantResult sub = ccat_connected(realized, mode, b);
    r.certificate["components"].push_back(sub.to_json());
    if (sub.kind == InvariantResult::Infinite) r.kind = InvariantResult::Infinite;
    if (sub.kind == InvariantResult::Unknown) {
      r.kind = InvariantResult::Unknown;
      r.budget_exhausted = true;
    }
    if (sub.kind == InvariantResult::Value) r.value += sub.value;
  }
  return r;
}

InvariantResult cdist(const Functor& f, const Functor& g, Mode mode, const Budgets& b) {
  if (f.source != g.source || f.target != g.target)
    throw CatError(CatErrorKind::BadInput, "homotopic distance needs parallel functors");
  PiecePredicate pred = [&](const Subcategory& piece) -> std::optional<nlohmann::json> {
    auto [realized, incl] = realize_subcategory(piece);
    Functor fr = restrict_functor(f, piece, realized, incl);
    Functor gr = restrict_functor(g, piece, realized, incl);
    std::optional<StrongHomotopy> h = strong_homotopic(fr, gr, b.functor_cap);
    if (!h) return std::nullopt;
    return nlohmann::json{{"homotopy", homotopy_json(*h)}};
  };
  return from_outcome("cdist", mode, minimal_cover_search(f.source, pred, cover_budget(b)));
}

InvariantResult ctc(const FinCatPtr& c, Mode mode, const Budgets& b) {
  ProductCat cc = product(c, c);
  Functor diag = diagonal_functor(c, cc);
  (void)diag;
  PiecePredicate pred = [&](const Subcategory& piece) -> std::optional<nlohmann::json> {
    auto [realized, incl] = realize_subcategory(piece);
    // A rule exists on the piece iff the two projections restricted to it are
    // homotopic: natural transformations into a product split componentwise,
    // and identity self-links pad the two zigzags to a common shape.
    Functor pa = compose_functors(cc.pr1, incl);
    Functor pb = compose_functors(cc.pr2, incl);
    std::optional<StrongHomotopy> h = strong_homotopic(pb, pa, b.functor_cap);
    if (!h) return std::nullopt;
    // pair with the constant zigzag on the first factor: incl ≃ Δ∘(p1∘incl)
    StrongHomotopy paired;
    for (const Functor& s : h->stages) {
      Functor st;
      st.source = realized;
      st.target = cc.cat;
      for (int o = 0; o < realized->num_objects(); ++o)
        st.obj_map.push_back(cc.obj_of(pa.obj_map[o], s.obj_map[o]));
      for (int m = 0; m < realized->num_morphisms(); ++m)
        st.mor_map.push_back(cc.mor_of(pa.mor_map[m], s.mor_map[m]));
      paired.stages.push_back(std::move(st));
    }
    for (size_t i = 0; i < h->links.size(); ++i) {
      NatTrans t;
      t.from = i % 2 == 0 ? paired.stages[i] : paired.stages[i + 1];
      t.to = i % 2 == 0 ? paired.stages[i + 1] : paired.stages[i];
      for (int o = 0; o < realized->num_objects(); ++o)
        t.components.push_back(
            cc.mor_of(c->identity[pa.obj_map[o]], h->links[i].components[o]));
      paired.links.push_back(std::move(t));
    }
    if (!check_strong_homotopy(paired))
      throw CatError(CatErrorKind::BadInput, "internal: paired rule homotopy invalid");
    nlohmann::json w;
    w["rule"] = functor_tables_json(pa);
    w["homotopy"] = homotopy_json(paired);
    return w;
  };
  InvariantResult r = from_outcome("ctc", mode, minimal_cover_search(cc.cat, pred, cover_budget(b)));
  return r;
}

std::optional<Functor> find_strict_section(const Functor& p, const Subcategory& piece,
                                           const FinCatPtr& realized, const Functor& inclusion) {
  (void)piece;
  const FinCat& u = *realized;
  const FinCat& e = *p.source;
  Functor s;
  s.source = realized;
  s.target = p.source;
  s.obj_map.assign(u.num_objects(), -1);
  s.mor_map.assign(u.num_morphisms(), -1);
  std::function<bool(int)> mor_rec = [&](int m) -> bool {
    if (m == u.num_morphisms()) return is_functor(s);
    for (int em = 0; em < e.num_morphisms(); ++em) {
      if (p.mor_map[em] != inclusion.mor_map[m]) continue;
      if (e.dom[em] != s.obj_map[u.dom[m]] || e.cod[em] != s.obj_map[u.cod[m]]) continue;
      if (u.is_identity(m) && !e.is_identity(em)) continue;
      bool ok = true;  // composites with already-assigned morphisms
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
      if (ok && mor_rec(m + 1)) return true;
      s.mor_map[m] = -1;
    }
    return false;
  };
  std::function<bool(int)> obj_rec = [&](int o) -> bool {
    if (o == u.num_objects()) return mor_rec(0);
    for (int eo = 0; eo < e.num_objects(); ++eo) {
      if (p.obj_map[eo] != inclusion.obj_map[o]) continue;
      s.obj_map[o] = eo;
      if (obj_rec(o + 1)) return true;
      s.obj_map[o] = -1;
    }
    return false;
  };
  if (!obj_rec(0)) return std::nullopt;
  return s;
}

InvariantResult secat(const Functor& p, Mode mode, const Budgets& b) {
  FinCatPtr base = p.target;
  PiecePredicate pred = [&](const Subcategory& piece) -> std::optional<nlohmann::json> {
    auto [realized, incl] = realize_subcategory(piece);
    if (mode == Mode::Strict) {
      std::optional<Functor> s = find_strict_section(p, piece, realized, incl);
      if (!s) return std::nullopt;
      return nlohmann::json{{"section", functor_tables_json(*s)}};
    }
    for (const Functor& s : enumerate_functors(realized, p.source, b.functor_cap)) {
      std::optional<StrongHomotopy> h = strong_homotopic(compose_functors(p, s), incl,
                                                         b.functor_cap);
      if (!h) continue;
      nlohmann::json w;
      w["section"] = functor_tables_json(s);
      w["homotopy"] = homotopy_json(*h);
      return w;
    }
    return std::nullopt;
  };
  return from_outcome("secat", mode, minimal_cover_search(base, pred, cover_budget(b)));
}

InvariantResult svarc_genus(const Functor& p, Mode mode, const Budgets& b) {
  if (mode == Mode::Strict)
    throw CatError(CatErrorKind::BadInput, "the genus uses homotopic sections; use secat");
  InvariantResult r = secat(p, mode, b);
  r.name = "sg";
  return r;
}

bool RelationReport::all_pass() const {
  for (const Item& it : items)
    if (!it.pass) return false;
  return true;
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const Item& it : items) {
    nlohmann::json e;
    e["relation"] = it.relation;
    e["lhs"] = nlohmann::json{{it.lhs_name, it.lhs}};
    e["rhs"] = nlohmann::json{{it.rhs_name, it.rhs}};
    e["pass"] = it.pass;
    if (!it.note.empty()) e["note"] = it.note;
    j.push_back(e);
  }
  return j;
}

namespace {

// comparison treating infinity as larger than every value; unknowns pass
// with a note rather than failing the report
struct Side {
  bool known = false, infinite = false;
  int value = -1;
  nlohmann::json to_json() const {
    if (!known) return "unknown";
    if (infinite) return "infinity";
    return value;
  }
};

Side side_of(const InvariantResult& r) {
  Side s;
  if (r.kind == InvariantResult::Value) {
    s.known = true;
    s.value = r.value;
  } else if (r.kind == InvariantResult::Infinite) {
    s.known = true;
    s.infinite = true;
  }
  return s;
}

void add_item(RelationReport& rep, const std::string& relation, const std::string& ln,
              const std::string& rn, const std::function<InvariantResult()>& lhs,
              const std::function<InvariantResult()>& rhs, bool equality) {
  RelationReport::Item it;
  it.relation = relation;
  it.lhs_name = ln;
  it.rhs_name = rn;
  try {
    Side l = side_of(lhs());
    Side r = side_of(rhs());
    it.lhs = l.to_json();
    it.rhs = r.to_json();
    if (!l.known || !r.known) {
      it.pass = true;
      it.note = "inconclusive within budget";
    } else if (equality) {
      it.pass = l.infinite == r.infinite && (l.infinite || l.value == r.value);
    } else {  // lhs <= rhs
      it.pass = r.infinite || (!l.infinite && l.value <= r.value);
    }
  } catch (const BudgetExceeded& e) {
    it.pass = true;
    it.note = std::string("skipped: ") + e.what();
  }
  rep.items.push_back(it);
}

}  // namespace

RelationReport verify_relations(const FinCatPtr& c, const Budgets& b) {
  RelationReport rep;
  bool connected = is_connected(c);
  Functor id = identity_functor(c);
  Functor konst = constant_functor(c, c, 0);

  add_item(rep, "weak and strong values agree on finite inputs", "ccat_w", "ccat_s",
           [&] { return ccat(c, Mode::Weak, b); }, [&] { return ccat(c, Mode::Strong, b); },
           true);
  add_item(rep, "cD_w(F,G) <= cD(F,G), with equality on finite inputs", "cD_w(const,id)",
           "cD_s(const,id)", [&] { return cdist(konst, id, Mode::Weak, b); },
           [&] { return cdist(konst, id, Mode::Strong, b); }, true);
  if (connected)
    add_item(rep, "ccat_w = cD_w(const, id) on connected bases", "ccat_w", "cD_w(const,id)",
             [&] { return ccat(c, Mode::Weak, b); },
             [&] { return cdist(konst, id, Mode::Weak, b); }, true);
  // the distance-vs-ccat bound needs a pair with F(c') and G(c') in the same
  // component for every object (otherwise the distance is vacuously infinite),
  // so on a disconnected base the sampled (const, id) pair is taken per component
  for (const std::vector<int>& comp : connected_components(c)) {
    if (connected) {
      add_item(rep, "cD_w(F,G) <= ccat_w of the common source", "cD_w(const,id)", "ccat_w",
               [&] { return cdist(konst, id, Mode::Weak, b); },
               [&] { return ccat(c, Mode::Weak, b); }, false);
    } else {
      auto [sub, incl] = realize_subcategory(full_subcategory(c, comp));
      Functor sub_id = identity_functor(sub);
      Functor sub_konst = constant_functor(sub, sub, 0);
      add_item(rep, "cD_w(F,G) <= ccat_w of the common source", "cD_w(const,id)", "ccat_w",
               [&, sub_konst, sub_id] { return cdist(sub_konst, sub_id, Mode::Weak, b); },
               [&, sub] { return ccat(sub, Mode::Weak, b); }, false);
    }
  }

  ProductCat cc = product(c, c);
  Functor p1 = cc.pr1, p2 = cc.pr2;
  add_item(rep, "cTC_w = cD_w(p1, p2)", "cTC_w", "cD_w(p1,p2)",
           [&] { return ctc(c, Mode::Weak, b); }, [&] { return cdist(p1, p2, Mode::Weak, b); },
           true);
  add_item(rep, "secat(P) <= ccat_w(B) for object-surjective weak fibrations (P = p1)",
           "secat(p1)", "ccat_w", [&] { return secat(p1, Mode::Strict, b); },
           [&] { return ccat(c, Mode::Weak, b); }, false);
  add_item(rep, "SG_w(G) <= SG_w(G∘F) with G = p1, F = diagonal", "SG_w(p1)", "SG_w(id)",
           [&] { return svarc_genus(p1, Mode::Weak, b); },
           [&] { return svarc_genus(compose_functors(p1, diagonal_functor(c, cc)), Mode::Weak, b); },
           false);
  add_item(rep, "secat(P') <= secat(P) along pullbacks (pullback of p1 along id)",
           "secat(pullback)", "secat(p1)",
           [&] {
             PullbackCat pb = pullback(p1, id);
             return secat(pb.pr_b, Mode::Strict, b);
           },
           [&] { return secat(p1, Mode::Strict, b); }, false);
  return rep;
}

}  // namespace cathom
