#include "fq/shapes.hpp"

#include <algorithm>
#include <functional>

namespace fq {

// ---- fibered categories ----

bool is_cartesian(const FiberedCategory& p, int arrow) {
  const FinCategory& d = *p.total;
  const FinCategory& c = *p.base;
  int f = p.proj.arr_map[arrow];
  int ep = d.arrows[arrow].dom, e = d.arrows[arrow].cod;
  for (int epp = 0; epp < d.num_objects(); ++epp)
    for (int psi : d.hom(epp, e))
      for (int g : c.hom(p.proj.obj_map[epp], c.arrows[f].dom)) {
        if (c.compose(f, g) != p.proj.arr_map[psi]) continue;
        int fillers = 0;
        for (int chi : d.hom(epp, ep))
          if (p.proj.arr_map[chi] == g && d.compose(arrow, chi) == psi) ++fillers;
        if (fillers != 1) return false;
      }
  return true;
}

std::optional<int> cartesian_lift(const FiberedCategory& p, int f, int e) {
  const FinCategory& d = *p.total;
  for (int a = 0; a < d.num_arrows(); ++a)
    if (d.arrows[a].cod == e && p.proj.arr_map[a] == f && is_cartesian(p, a)) return a;
  return std::nullopt;
}

std::optional<int> reindex(const FiberedCategory& p, int f, int elem) {
  auto lift = cartesian_lift(p, f, elem);
  if (!lift) return std::nullopt;
  return p.total->arrows[*lift].dom;
}

int FiberLattice::index_of(int obj) const {
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (elems[i] == obj) return i;
  return -1;
}

FiberLattice fiber_lattice(const FiberedCategory& p, int x) {
  const FinCategory& d = *p.total;
  FiberLattice l;
  l.base_obj = x;
  for (int e = 0; e < d.num_objects(); ++e)
    if (p.proj.obj_map[e] == x) l.elems.push_back(e);
  int n = static_cast<int>(l.elems.size());
  int idx = p.base->identity[x];
  l.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a : d.hom(l.elems[i], l.elems[j]))
        if (p.proj.arr_map[a] == idx) {
          l.leq[i][j] = true;
          break;
        }
  auto bound = [&](int i, int j, bool upper) {
    std::vector<int> cands;
    for (int k = 0; k < n; ++k) {
      bool ok = upper ? l.leq[i][k] && l.leq[j][k] : l.leq[k][i] && l.leq[k][j];
      if (ok) cands.push_back(k);
    }
    for (int k0 : cands) {
      bool extreme = true;
      for (int k : cands)
        if (upper ? !l.leq[k0][k] : !l.leq[k][k0]) {
          extreme = false;
          break;
        }
      if (extreme) return k0;
    }
    return -1;
  };
  l.join.assign(n, std::vector<int>(n, -1));
  l.meet.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      l.join[i][j] = bound(i, j, true);
      l.meet[i][j] = bound(i, j, false);
    }
  for (int k = 0; k < n; ++k) {
    bool top = true, bot = true;
    for (int i = 0; i < n; ++i) {
      top = top && l.leq[i][k];
      bot = bot && l.leq[k][i];
    }
    if (top && l.top < 0) l.top = k;
    if (bot && l.bottom < 0) l.bottom = k;
  }
  return l;
}

namespace {

constexpr const char* kTheoryAnchor = "shapes/theory";
constexpr const char* kTupleAnchor = "shapes/tuple";
constexpr const char* kIntervalAnchor = "shapes/interval";
constexpr const char* kQuotAnchor = "shapes/fibration-quotient";
constexpr const char* kTheoremAnchor = "shapes/theorem";

void check_fibration_lifts(Report& rep, const FiberedCategory& p, const std::string& check,
                           const char* anchor) {
  const FinCategory& c = *p.base;
  const FinCategory& d = *p.total;
  for (int f = 0; f < c.num_arrows(); ++f)
    for (int e = 0; e < d.num_objects(); ++e) {
      if (p.proj.obj_map[e] != c.arrows[f].cod) continue;
      if (!cartesian_lift(p, f, e)) {
        rep.fail(check, c.arrows[f].name + " at " + d.objects[e], anchor);
        return;
      }
    }
  rep.pass(check, anchor);
}

}  // namespace

Report validate_shape_theory(const FiberedCategory& p) {
  Report rep;
  rep.subject = "shape theory " + p.total->name + " over " + p.base->name;
  rep.merge(validate_functor(p.proj));
  check_fibration_lifts(rep, p, "cartesian-lifts-exist", kTheoryAnchor);
  const FinCategory& c = *p.base;
  const FinCategory& d = *p.total;
  for (int x = 0; x < c.num_objects(); ++x) {
    auto l = fiber_lattice(p, x);
    int n = static_cast<int>(l.elems.size());
    std::string witness;
    bool ok = l.top >= 0 && l.bottom >= 0;
    if (!ok) witness = "unbounded";
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && l.leq[i][j] && l.leq[j][i]) {
          ok = false;
          witness = "not antisymmetric: " + d.objects[l.elems[i]];
        } else if (l.join[i][j] < 0 || l.meet[i][j] < 0) {
          ok = false;
          witness = "no bound for " + d.objects[l.elems[i]] + ", " + d.objects[l.elems[j]];
        } else if (l.meet[i][l.join[i][j]] != i || l.join[i][l.meet[i][j]] != i) {
          ok = false;
          witness = "absorption fails at " + d.objects[l.elems[i]];
        }
      }
    rep.add("fiber-lattice " + c.objects[x], ok, witness, kTheoryAnchor);
  }
  return rep;
}

// ---- the category of monomorphisms ----

FinCategory mono_category(const FinCategory& v, MonoCategoryInfo* info, bool canonical_only) {
  MonoCategoryInfo local;
  MonoCategoryInfo& in = info ? *info : local;
  FinCategory c;
  c.name = (canonical_only ? "sub(" : "mono(") + v.name + ")";
  if (canonical_only) {
    for (int x = 0; x < v.num_objects(); ++x)
      for (int m : subobject_monos(v, x)) in.obj_mono.push_back(m);
  } else {
    for (int m = 0; m < v.num_arrows(); ++m)
      if (v.is_mono(m)) in.obj_mono.push_back(m);
  }
  for (int o = 0; o < static_cast<int>(in.obj_mono.size()); ++o) {
    in.obj_lookup[in.obj_mono[o]] = o;
    c.objects.push_back("[" + v.arrows[in.obj_mono[o]].name + "]");
  }
  int nobj = c.num_objects();
  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j) {
      int mi = in.obj_mono[i], mj = in.obj_mono[j];
      for (int f : v.hom(v.arrows[mi].cod, v.arrows[mj].cod)) {
        // the top of the square is unique because mj is mono
        for (int u : v.hom(v.arrows[mi].dom, v.arrows[mj].dom))
          if (v.compose(mj, u) == v.compose(f, mi)) {
            in.arr_lookup[{i, j, f}] = static_cast<int>(c.arrows.size());
            in.arr_squares.emplace_back(u, f);
            c.arrows.push_back({c.objects[i] + ">" + c.objects[j] + ":" + v.arrows[f].name,
                                i, j});
            break;
          }
      }
    }
  int narr = c.num_arrows();
  c.identity.assign(nobj, FinCategory::kNone);
  for (int o = 0; o < nobj; ++o)
    c.identity[o] = in.arr_lookup.at({o, o, v.identity[v.arrows[in.obj_mono[o]].cod]});
  c.table.assign(narr, std::vector<int>(narr, FinCategory::kNone));
  for (int g = 0; g < narr; ++g)
    for (int f = 0; f < narr; ++f) {
      if (c.arrows[f].cod != c.arrows[g].dom) continue;
      int bottom = v.compose(in.arr_squares[g].second, in.arr_squares[f].second);
      c.table[g][f] = in.arr_lookup.at({c.arrows[f].dom, c.arrows[g].cod, bottom});
    }
  c.finalize();
  return c;
}

FunctorData mono_projection(const FinCategory& mono, const MonoCategoryInfo& info,
                            const FinCategory& v) {
  FunctorData p;
  p.src = &mono;
  p.dst = &v;
  for (int o = 0; o < mono.num_objects(); ++o)
    p.obj_map.push_back(v.arrows[info.obj_mono[o]].cod);
  for (int a = 0; a < mono.num_arrows(); ++a) p.arr_map.push_back(info.arr_squares[a].second);
  return p;
}

// ---- strict intervals ----

LatticeTerm lt_top() { return {LatticeTerm::Kind::Top, "", "", {}}; }
LatticeTerm lt_bottom() { return {LatticeTerm::Kind::Bottom, "", "", {}}; }
LatticeTerm lt_gen(std::string name) {
  return {LatticeTerm::Kind::Gen, std::move(name), "", {}};
}
LatticeTerm lt_meet(LatticeTerm a, LatticeTerm b) {
  return {LatticeTerm::Kind::Meet, "", "", {std::move(a), std::move(b)}};
}
LatticeTerm lt_join(LatticeTerm a, LatticeTerm b) {
  return {LatticeTerm::Kind::Join, "", "", {std::move(a), std::move(b)}};
}
LatticeTerm lt_reindex(std::string arrow, LatticeTerm t) {
  return {LatticeTerm::Kind::Reindex, "", std::move(arrow), {std::move(t)}};
}

namespace {

struct AxiomEvaluator {
  const FiberedCategory& t;
  const IntervalData& iv;
  std::map<int, FiberLattice> lattices;
  std::string err;

  const FiberLattice& fiber(int x) {
    auto it = lattices.find(x);
    if (it == lattices.end()) it = lattices.emplace(x, fiber_lattice(t, x)).first;
    return it->second;
  }

  // evaluates to an index in fiber(x)'s element list, or -1 with err set
  int eval(const LatticeTerm& tm, int x) {
    const FiberLattice& l = fiber(x);
    switch (tm.kind) {
      case LatticeTerm::Kind::Top:
        if (l.top < 0) err = "no top over " + t.base->objects[x];
        return l.top;
      case LatticeTerm::Kind::Bottom:
        if (l.bottom < 0) err = "no bottom over " + t.base->objects[x];
        return l.bottom;
      case LatticeTerm::Kind::Gen: {
        auto it = iv.generators.find(tm.gen);
        if (it == iv.generators.end()) {
          err = "unknown generator " + tm.gen;
          return -1;
        }
        if (it->second.first != x) {
          err = "generator " + tm.gen + " lives over another fiber";
          return -1;
        }
        int i = l.index_of(it->second.second);
        if (i < 0) err = "generator " + tm.gen + " is not a fiber element";
        return i;
      }
      case LatticeTerm::Kind::Meet:
      case LatticeTerm::Kind::Join: {
        int a = eval(tm.args[0], x);
        if (a < 0) return -1;
        int b = eval(tm.args[1], x);
        if (b < 0) return -1;
        int r = tm.kind == LatticeTerm::Kind::Meet ? l.meet[a][b] : l.join[a][b];
        if (r < 0) err = "lattice operation undefined over " + t.base->objects[x];
        return r;
      }
      case LatticeTerm::Kind::Reindex: {
        int f = t.base->find_arrow(tm.arrow);
        if (f < 0) {
          err = "unknown arrow " + tm.arrow;
          return -1;
        }
        if (t.base->arrows[f].dom != x) {
          err = "reindexing along " + tm.arrow + " lands in another fiber";
          return -1;
        }
        int c = eval(tm.args[0], t.base->arrows[f].cod);
        if (c < 0) return -1;
        auto r = reindex(t, f, fiber(t.base->arrows[f].cod).elems[c]);
        if (!r) {
          err = "no cartesian lift along " + tm.arrow;
          return -1;
        }
        int i = l.index_of(*r);
        if (i < 0) err = "reindexing left the fiber";
        return i;
      }
    }
    return -1;
  }
};

}  // namespace

Report check_strict_interval(const FiberedCategory& t, const IntervalData& iv) {
  Report rep;
  rep.subject = "strict interval in " + t.base->name;
  const FinCategory& c = *t.base;
  bool pts = iv.point0 != iv.point1 && c.arrows[iv.point0].cod == iv.interval &&
             c.arrows[iv.point1].cod == iv.interval &&
             c.arrows[iv.point0].dom == c.arrows[iv.point1].dom;
  rep.add("points-distinct", pts,
          c.arrows[iv.point0].name + " vs " + c.arrows[iv.point1].name, kIntervalAnchor);
  std::string source = std::to_string(iv.axioms.size()) + " axioms" +
                       (iv.provenance.empty() ? "" : ", " + iv.provenance);
  rep.pass("axiom-list (" + source + ")", kIntervalAnchor);
  AxiomEvaluator ev{t, iv, {}, ""};
  for (const auto& ax : iv.axioms) {
    ev.err.clear();
    int lhs = ev.eval(ax.lhs, ax.fiber);
    int rhs = ev.err.empty() ? ev.eval(ax.rhs, ax.fiber) : -1;
    if (!ev.err.empty()) {
      rep.fail("axiom " + ax.name, ev.err, kIntervalAnchor);
      continue;
    }
    const FiberLattice& l = ev.fiber(ax.fiber);
    rep.add("axiom " + ax.name, l.equiv(lhs, rhs),
            t.total->objects[l.elems[lhs]] + " vs " + t.total->objects[l.elems[rhs]],
            kIntervalAnchor);
  }
  return rep;
}

// ---- tuple validation ----

namespace {

bool sub_leq(const FinCategory& c, int a, int b) {
  for (int h : c.hom(c.arrows[a].dom, c.arrows[b].dom))
    if (c.compose(b, h) == a) return true;
  return false;
}

bool same_subobject(const FinCategory& c, int a, int b) {
  return sub_leq(c, a, b) && sub_leq(c, b, a);
}

std::optional<int> sub_union(const FinCategory& c, const std::vector<int>& pool, int a,
                             int b) {
  std::vector<int> ub;
  for (int m : pool)
    if (sub_leq(c, a, m) && sub_leq(c, b, m)) ub.push_back(m);
  for (int m : ub) {
    bool least = true;
    for (int k : ub)
      if (!sub_leq(c, m, k)) {
        least = false;
        break;
      }
    if (least) return m;
  }
  return std::nullopt;
}

bool is_terminal_obj(const FinCategory& c, int t) {
  for (int a = 0; a < c.num_objects(); ++a)
    if (c.hom(a, t).size() != 1) return false;
  return true;
}

/// Exhaustive preservation battery for a left-exact regular functor: finite
/// limits (terminal, products, equalizers, pullbacks), monos, epis, and
/// finite unions of subobjects. Source limits outside the target fragment
/// cannot occur; source diagrams without a limit are counted, not failed.
void check_regularity(Report& rep, const FunctorData& f, const std::string& prefix,
                      const char* anchor) {
  const FinCategory& a = *f.src;
  const FinCategory& b = *f.dst;
  auto ta = terminal_object(a);
  rep.add(prefix + "terminal", ta && is_terminal_obj(b, f.obj_map[*ta]),
          ta ? b.objects[f.obj_map[*ta]] : "no terminal in source", anchor);

  ProductTable pa(a);
  std::size_t np = 0, mp = 0;
  bool prod = true;
  for (int x = 0; x < a.num_objects() && prod; ++x)
    for (int y = 0; y < a.num_objects(); ++y) {
      auto pr = pa.product(x, y);
      if (!pr) {
        ++mp;
        continue;
      }
      BinaryProduct im{f.obj_map[pr->obj], f.arr_map[pr->p1], f.arr_map[pr->p2]};
      if (!is_binary_product(b, f.obj_map[x], f.obj_map[y], im)) {
        rep.fail(prefix + "products", a.objects[x] + "*" + a.objects[y], anchor);
        prod = false;
        break;
      }
      ++np;
    }
  if (prod)
    rep.pass(prefix + "products (" + std::to_string(np) + " checked, " + std::to_string(mp) +
                 " outside fragment)",
             anchor);

  auto run_battery = [&](const FinCategory& shape, const std::string& check,
                         auto&& enumerate) {
    std::size_t checked = 0, missing = 0;
    bool ok = true;
    enumerate([&](const DiagramData& d) {
      if (!ok) return;
      auto lim = limit(d);
      if (!lim) {
        ++missing;
        return;
      }
      DiagramData im = d;
      im.dst = &b;
      for (auto& o : im.obj_map) o = f.obj_map[o];
      for (auto& r : im.arr_map) r = f.arr_map[r];
      Cone cand{f.obj_map[lim->apex], lim->legs};
      for (auto& leg : cand.legs) leg = f.arr_map[leg];
      if (!is_limit(im, cand)) {
        rep.fail(prefix + check, "diagram over " + a.objects[d.obj_map[0]], anchor);
        ok = false;
        return;
      }
      ++checked;
    });
    if (ok)
      rep.pass(prefix + check + " (" + std::to_string(checked) + " checked, " +
                   std::to_string(missing) + " outside fragment)",
               anchor);
  };

  auto par = shape_parallel_pair();
  run_battery(par, "equalizers", [&](auto&& visit) {
    for (int x = 0; x < a.num_objects(); ++x)
      for (int y = 0; y < a.num_objects(); ++y)
        for (int g1 : a.hom(x, y))
          for (int g2 : a.hom(x, y)) {
            if (g2 < g1) continue;
            visit(make_diagram(par, a, {x, y}, {a.identity[x], a.identity[y], g1, g2}));
          }
  });
  auto cosp = shape_cospan();
  run_battery(cosp, "pullbacks", [&](auto&& visit) {
    for (int g1 = 0; g1 < a.num_arrows(); ++g1)
      for (int g2 = 0; g2 < a.num_arrows(); ++g2) {
        if (a.arrows[g1].cod != a.arrows[g2].cod) continue;
        int z = a.arrows[g1].cod;
        visit(make_diagram(
            cosp, a, {z, a.arrows[g1].dom, a.arrows[g2].dom},
            {a.identity[z], a.identity[a.arrows[g1].dom], a.identity[a.arrows[g2].dom], g1,
             g2}));
      }
  });

  bool classes = true;
  for (int g = 0; g < a.num_arrows() && classes; ++g) {
    if (a.is_mono(g) && !b.is_mono(f.arr_map[g])) {
      rep.fail(prefix + "monos", a.arrows[g].name, anchor);
      classes = false;
    }
    if (a.is_epi(g) && !b.is_epi(f.arr_map[g])) {
      rep.fail(prefix + "epis", a.arrows[g].name, anchor);
      classes = false;
    }
  }
  if (classes) rep.pass(prefix + "monos-and-epis", anchor);

  std::size_t nu = 0, mu = 0;
  bool unions = true;
  for (int x = 0; x < a.num_objects() && unions; ++x) {
    auto subs = subobject_monos(a, x);
    auto target = subobject_monos(b, f.obj_map[x]);
    for (std::size_t i = 0; i < subs.size() && unions; ++i)
      for (std::size_t j = i; j < subs.size(); ++j) {
        auto u = sub_union(a, subs, subs[i], subs[j]);
        if (!u) {
          ++mu;
          continue;
        }
        auto iu = sub_union(b, target, f.arr_map[subs[i]], f.arr_map[subs[j]]);
        if (!iu || !same_subobject(b, *iu, f.arr_map[*u])) {
          rep.fail(prefix + "unions",
                   a.arrows[subs[i]].name + " v " + a.arrows[subs[j]].name, anchor);
          unions = false;
          break;
        }
        ++nu;
      }
  }
  if (unions)
    rep.pass(prefix + "unions (" + std::to_string(nu) + " pairs, " + std::to_string(mu) +
                 " without union)",
             anchor);
}

}  // namespace

Report validate_shapes_tuple(const ShapesTuple& t) {
  Report rep;
  rep.subject = "shapes tuple over " + t.m.cat->name;
  const FinCategory& mc = *t.m.cat;
  const FinCategory& v = *t.v;
  ProductTable ptm(mc);

  // (1) the model category
  rep.merge(verify_model_structure(t.m));
  rep.merge(check_right_properness(t.m));
  bool cmono = true;
  for (int g = 0; g < mc.num_arrows() && cmono; ++g)
    if (t.m.C.contains(g) && !mc.is_mono(g)) {
      rep.fail("cofibrations-are-monos", mc.arrows[g].name, kTupleAnchor);
      cmono = false;
    }
  if (cmono) rep.pass("cofibrations-are-monos", kTupleAnchor);
  auto term = terminal_object(mc);
  rep.add("topos-terminal", term.has_value(), mc.name, kTupleAnchor);
  std::size_t np = 0, mp = 0, ne = 0;
  for (int x = 0; x < mc.num_objects(); ++x)
    for (int y = 0; y < mc.num_objects(); ++y) {
      ptm.product(x, y) ? ++np : ++mp;
      if (exponential(ptm, x, y)) ++ne;
    }
  rep.add("topos-products (" + std::to_string(np) + " of " + std::to_string(np + mp) +
              " pairs)",
          np > 0, "", kTupleAnchor);
  rep.add("topos-exponentials (" + std::to_string(ne) + " found)", ne > 0, "", kTupleAnchor);
  rep.add("topos-classifier", subobject_classifier(mc).has_value(), mc.name, kTupleAnchor);

  // (2) the shape model
  rep.merge(validate_shape_theory(t.theory));
  check_fibration_lifts(rep, t.mono, "mono-fibration-lifts", kTupleAnchor);
  auto lhs = compose_functors(t.mono.proj, t.model.m1);
  auto rhs = compose_functors(t.model.m0, t.theory.proj);
  rep.add("model-square-commutes",
          lhs.obj_map == rhs.obj_map && lhs.arr_map == rhs.arr_map, "", kTupleAnchor);

  const FinCategory& t0 = *t.theory.base;
  const FinCategory& t1 = *t.theory.total;
  ProductTable ptt(t0);
  std::size_t nprod = 0, miss = 0;
  bool m0prod = true;
  for (int x = 0; x < t0.num_objects() && m0prod; ++x)
    for (int y = 0; y < t0.num_objects(); ++y) {
      auto pr = ptt.product(x, y);
      if (!pr) {
        ++miss;
        continue;
      }
      BinaryProduct im{t.model.m0.obj_map[pr->obj], t.model.m0.arr_map[pr->p1],
                       t.model.m0.arr_map[pr->p2]};
      if (!is_binary_product(v, t.model.m0.obj_map[x], t.model.m0.obj_map[y], im)) {
        rep.fail("m0-preserves-products", t0.objects[x] + "*" + t0.objects[y], kTupleAnchor);
        m0prod = false;
        break;
      }
      ++nprod;
    }
  if (m0prod)
    rep.pass("m0-preserves-products (" + std::to_string(nprod) + " checked, " +
                 std::to_string(miss) + " outside fragment)",
             kTupleAnchor);

  bool cart = true;
  std::size_t ncart = 0;
  for (int g = 0; g < t1.num_arrows() && cart; ++g) {
    if (!is_cartesian(t.theory, g)) continue;
    ++ncart;
    if (!is_cartesian(t.mono, t.model.m1.arr_map[g])) {
      rep.fail("m1-preserves-cartesian", t1.arrows[g].name, kTupleAnchor);
      cart = false;
    }
  }
  if (cart)
    rep.pass("m1-preserves-cartesian (" + std::to_string(ncart) + " arrows)", kTupleAnchor);

  bool lat = true;
  for (int x = 0; x < t0.num_objects() && lat; ++x) {
    auto src = fiber_lattice(t.theory, x);
    auto dst = fiber_lattice(t.mono, t.model.m0.obj_map[x]);
    auto image = [&](int i) { return dst.index_of(t.model.m1.obj_map[src.elems[i]]); };
    int n = static_cast<int>(src.elems.size());
    if (src.top >= 0 && dst.top >= 0 && !dst.equiv(image(src.top), dst.top)) lat = false;
    if (src.bottom >= 0 && dst.bottom >= 0 && !dst.equiv(image(src.bottom), dst.bottom))
      lat = false;
    for (int i = 0; i < n && lat; ++i)
      for (int j = 0; j < n && lat; ++j) {
        int js = src.join[i][j], ms = src.meet[i][j];
        int jd = dst.join[image(i)][image(j)], md = dst.meet[image(i)][image(j)];
        if (js < 0 || ms < 0 || jd < 0 || md < 0 || !dst.equiv(image(js), jd) ||
            !dst.equiv(image(ms), md))
          lat = false;
      }
    if (!lat) rep.fail("m1-preserves-fiber-lattices", t0.objects[x], kTupleAnchor);
  }
  if (lat) rep.pass("m1-preserves-fiber-lattices", kTupleAnchor);

  // (3) the coherent functor
  check_regularity(rep, t.omega, "omega-", kTupleAnchor);

  // (4) products with omega images preserve acyclic cofibrations
  auto cw = class_intersection(t.m.C, t.m.W);
  bool stable = true;
  std::size_t nst = 0, mst = 0;
  for (int uo = 0; uo < v.num_objects() && stable; ++uo) {
    int u = t.omega.obj_map[uo];
    for (int g = 0; g < mc.num_arrows(); ++g) {
      if (!cw.contains(g)) continue;
      auto pd = ptm.product(mc.arrows[g].dom, u);
      auto pc = pd ? ptm.pairing(mc.arrows[g].cod, u, mc.compose(g, pd->p1), pd->p2)
                   : std::nullopt;
      if (!pd || !pc) {
        ++mst;
        continue;
      }
      if (!cw.contains(*pc)) {
        rep.fail("acyclic-cofibrations-stable", mc.arrows[g].name + " x " + v.objects[uo],
                 kTupleAnchor);
        stable = false;
        break;
      }
      ++nst;
    }
  }
  if (stable)
    rep.pass("acyclic-cofibrations-stable (" + std::to_string(nst) + " checked, " +
                 std::to_string(mst) + " outside fragment)",
             kTupleAnchor);
  return rep;
}

// ---- quotients ----

std::optional<FunctorData> induced_functor(const FunctorData& f, const FilterQuotient& qs,
                                           const FilterQuotient& qd, Report* out_report) {
  Report rep;
  rep.subject = "induced functor " + qs.quotient.name + " -> " + qd.quotient.name;
  const FinCategory& s = *qs.base;
  const FinCategory& d = *qd.base;
  const SubterminalPoset& pd = *qd.filter.poset;
  auto finish = [&](std::optional<FunctorData> g) {
    if (out_report) *out_report = rep;
    return g;
  };

  bool restricts = true;
  for (int u : qs.filter.members) {
    int r = pd.representative(f.obj_map[u]);
    if (r == FinCategory::kNone || !qd.filter.contains(r)) {
      rep.fail("filter-restriction", s.objects[u], kQuotAnchor);
      restricts = false;
    }
  }
  if (!restricts) return finish(std::nullopt);
  rep.pass("filter-restriction", kQuotAnchor);

  int u = pd.representative(f.obj_map[qs.w0]);
  FunctorData g;
  g.src = &qs.quotient;
  g.dst = &qd.quotient;
  g.obj_map = f.obj_map;
  g.arr_map.assign(qs.quotient.num_arrows(), FinCategory::kNone);
  bool built = true;
  std::string witness;
  for (int qf = 0; qf < qs.quotient.num_arrows() && built; ++qf) {
    int x = qs.quotient.arrows[qf].dom;
    int f0 = qs.canonical_rep[qf];
    auto ps = qs.products().product(x, qs.w0);
    auto pp = qd.products().product(f.obj_map[x], u);
    if (!pp) {
      witness = "no product " + d.objects[f.obj_map[x]] + "*" + d.objects[u];
      built = false;
      break;
    }
    int fxw = f.obj_map[ps->obj];
    int med = FinCategory::kNone;
    for (int m : d.hom(pp->obj, fxw))
      if (d.is_iso(m) && d.compose(f.arr_map[ps->p1], m) == pp->p1) {
        med = m;
        break;
      }
    if (med == FinCategory::kNone) {
      witness = "no product comparison into " + d.objects[fxw];
      built = false;
      break;
    }
    g.arr_map[qf] = qd.germ_of(f.obj_map[x], u, d.compose(f.arr_map[f0], med));
    if (g.arr_map[qf] == FinCategory::kNone) {
      witness = "germ of " + qs.quotient.arrows[qf].name + " not found";
      built = false;
    }
  }
  rep.add("induced-arrows", built, witness, kQuotAnchor);
  if (!built) return finish(std::nullopt);
  rep.merge(validate_functor(g));

  bool comm = true;
  for (int a = 0; a < s.num_arrows() && comm; ++a)
    if (g.arr_map[qs.project_arrow(a)] != qd.project_arrow(f.arr_map[a])) {
      rep.fail("projection-square", s.arrows[a].name, kQuotAnchor);
      comm = false;
    }
  if (comm) rep.pass("projection-square", kQuotAnchor);
  if (!rep.ok()) return finish(std::nullopt);
  return finish(g);
}

std::unique_ptr<FibrationQuotient> fibration_quotient(const FiberedCategory& p,
                                                      const Filter& phi,
                                                      Report* out_report) {
  auto r = std::make_unique<FibrationQuotient>();
  Report& rep = r->report;
  rep.subject = "fibration quotient of " + p.total->name + " over " + p.base->name;
  auto finish = [&]() {
    if (out_report) *out_report = rep;
  };

  r->total_poset = subterminal_poset(*p.total);
  std::vector<int> gens;
  bool tops = true;
  for (int u : phi.members) {
    auto l = fiber_lattice(p, u);
    int g = l.top >= 0 ? r->total_poset.representative(l.elems[l.top]) : FinCategory::kNone;
    if (g == FinCategory::kNone) {
      rep.fail("fiber-tops-subterminal", p.base->objects[u], kQuotAnchor);
      tops = false;
    } else {
      gens.push_back(g);
    }
  }
  if (!tops) {
    finish();
    return r;
  }
  rep.pass("fiber-tops-subterminal", kQuotAnchor);

  // the lifted filter: everything above a fiberwise top over a member
  std::vector<int> members;
  for (int i = 0; i < static_cast<int>(r->total_poset.elems.size()); ++i)
    for (int g : gens)
      if (r->total_poset.leq[r->total_poset.index_of(g)][i]) {
        members.push_back(r->total_poset.elems[i]);
        break;
      }
  Report frep;
  auto tf = make_filter(r->total_poset, members, &frep);
  rep.add("lifted-filter", tf.has_value(), tf ? "" : frep.first_failure(), kQuotAnchor);
  if (!tf) {
    finish();
    return r;
  }
  r->total_filter = *tf;

  Report brep, trep;
  auto bq = filter_quotient(*p.base, phi, &brep);
  rep.add("base-quotient", bq.has_value(), bq ? "" : brep.first_failure(), kQuotAnchor);
  auto tq = filter_quotient(*p.total, r->total_filter, &trep);
  rep.add("total-quotient", tq.has_value(), tq ? "" : trep.first_failure(), kQuotAnchor);
  if (!bq || !tq) {
    finish();
    return r;
  }
  r->base_q = std::move(*bq);
  r->total_q = std::move(*tq);

  Report irep;
  auto g = induced_functor(p.proj, r->total_q, r->base_q, &irep);
  rep.merge(irep);
  if (!g) {
    finish();
    return r;
  }
  r->proj_q = *g;

  FiberedCategory qp{&r->base_q.quotient, &r->total_q.quotient, r->proj_q};
  check_fibration_lifts(rep, qp, "quotient-cartesian-lifts", kQuotAnchor);
  finish();
  return r;
}

Report regular_quotient_check(const FunctorData& f, const FilterQuotient& qv,
                              const FilterQuotient& qw) {
  Report rep;
  rep.subject = "regularity of the induced functor on " + qv.quotient.name;
  Report irep;
  auto g = induced_functor(f, qv, qw, &irep);
  rep.merge(irep);
  if (!g) return rep;
  check_regularity(rep, *g, "quotient-", kQuotAnchor);
  return rep;
}

namespace {

IntervalData transport_interval(const IntervalData& iv, const FilterQuotient& bq) {
  IntervalData out = iv;
  out.point0 = bq.project_arrow(iv.point0);
  out.point1 = bq.project_arrow(iv.point1);
  std::function<void(LatticeTerm&)> walk = [&](LatticeTerm& t) {
    if (t.kind == LatticeTerm::Kind::Reindex) {
      int a = bq.base->find_arrow(t.arrow);
      t.arrow = bq.quotient.arrows[bq.project_arrow(a)].name;
    }
    for (auto& c : t.args) walk(c);
  };
  for (auto& ax : out.axioms) {
    walk(ax.lhs);
    walk(ax.rhs);
  }
  out.provenance = iv.provenance.empty() ? "transported" : iv.provenance + ", transported";
  return out;
}

}  // namespace

std::unique_ptr<QuotientShapes> quotient_shapes_tuple(const ShapesTuple& t,
                                                      const ShapesFilterTriple& tr) {
  auto r = std::make_unique<QuotientShapes>();
  Report& rep = r->report;
  rep.subject = "quotient shapes tuple over " + t.m.cat->name;
  const FinCategory& mc = *t.m.cat;
  const FinCategory& t0 = *t.theory.base;
  ProductTable ptm(mc);

  rep.merge(validate_model_filter(t.m, ptm, *tr.phi_m));
  auto restricts = [&](const FunctorData& fn, const Filter& from, const Filter& to,
                       const std::string& check) {
    bool ok = true;
    for (int u : from.members) {
      int img = to.poset->representative(fn.obj_map[u]);
      if (img == FinCategory::kNone || !to.contains(img)) {
        rep.fail(check, fn.src->objects[u], kTheoremAnchor);
        ok = false;
      }
    }
    if (ok) rep.pass(check, kTheoremAnchor);
  };
  restricts(t.model.m0, *tr.phi_t, *tr.phi_v, "m0-restricts-to-filters");
  restricts(t.omega, *tr.phi_v, *tr.phi_m, "omega-restricts-to-filters");
  if (!rep.ok()) return r;

  Report mrep;
  auto qm = filter_quotient(mc, *tr.phi_m, &mrep);
  rep.add("m-quotient", qm.has_value(), qm ? "" : mrep.first_failure(), kTheoremAnchor);
  if (!qm) return r;
  r->m_q = std::move(*qm);
  r->transferred = transfer_model_structure(t.m, *r->m_q);
  rep.add("m-transfer", r->transferred.report.ok(),
          r->transferred.report.ok() ? "" : r->transferred.report.first_failure(),
          kTheoremAnchor);
  if (!r->transferred.report.ok()) return r;

  r->theory_q = fibration_quotient(t.theory, *tr.phi_t);
  rep.add("theory-fibration-quotient", r->theory_q->report.ok(),
          r->theory_q->report.ok() ? "" : r->theory_q->report.first_failure(),
          kTheoremAnchor);
  r->mono_q = fibration_quotient(t.mono, *tr.phi_v);
  rep.add("mono-fibration-quotient", r->mono_q->report.ok(),
          r->mono_q->report.ok() ? "" : r->mono_q->report.first_failure(), kTheoremAnchor);
  if (!r->theory_q->report.ok() || !r->mono_q->report.ok()) return r;

  Report i0, i1, i2;
  r->m0_q = induced_functor(t.model.m0, r->theory_q->base_q, r->mono_q->base_q, &i0);
  rep.add("induced-m0", r->m0_q.has_value(),
          r->m0_q ? "" : i0.first_failure(), kTheoremAnchor);
  r->m1_q = induced_functor(t.model.m1, r->theory_q->total_q, r->mono_q->total_q, &i1);
  rep.add("induced-m1", r->m1_q.has_value(),
          r->m1_q ? "" : i1.first_failure(), kTheoremAnchor);
  r->omega_q = induced_functor(t.omega, r->mono_q->base_q, *r->m_q, &i2);
  rep.add("induced-omega", r->omega_q.has_value(),
          r->omega_q ? "" : i2.first_failure(), kTheoremAnchor);
  if (!r->m0_q || !r->m1_q || !r->omega_q) return r;

  r->interval_q = transport_interval(t.interval, r->theory_q->base_q);
  r->tuple.m = r->transferred.model;
  r->tuple.v = &r->mono_q->base_q.quotient;
  r->tuple.theory = {&r->theory_q->base_q.quotient, &r->theory_q->total_q.quotient,
                     r->theory_q->proj_q};
  r->tuple.mono = {&r->mono_q->base_q.quotient, &r->mono_q->total_q.quotient,
                   r->mono_q->proj_q};
  r->tuple.model = {*r->m0_q, *r->m1_q};
  r->tuple.omega = *r->omega_q;
  r->tuple.interval = r->interval_q;
  r->complete = true;

  (void)t0;
  rep.merge(validate_shapes_tuple(r->tuple));
  rep.merge(check_strict_interval(r->tuple.theory, r->tuple.interval));
  return r;
}

// ---- built-in instance ----

std::unique_ptr<BuiltinShapes> builtin_interval_fragment() {
  auto b = std::make_unique<BuiltinShapes>();
  b->v = finset_category(2);
  b->m_cat = product_category(b->v, b->v, &b->m_info);
  b->t1 = mono_category(b->v, &b->t1_info, true);
  b->mono_v = mono_category(b->v, &b->mono_info, false);
  b->v_poset = subterminal_poset(b->v);
  b->m_poset = subterminal_poset(b->m_cat);
  b->phi_t = *trivial_filter(b->v_poset);
  b->phi_v = b->phi_t;
  int one = b->v.find_object("1"), zero = b->v.find_object("0");
  b->phi_m = *principal_filter(b->m_poset, b->m_info.pair_object(one, zero));

  b->tuple.m = {&b->m_cat, class_all(b->m_cat), class_isos(b->m_cat), class_all(b->m_cat)};
  b->tuple.v = &b->v;
  b->tuple.theory = {&b->v, &b->t1, mono_projection(b->t1, b->t1_info, b->v)};
  b->tuple.mono = {&b->v, &b->mono_v, mono_projection(b->mono_v, b->mono_info, b->v)};

  FunctorData m1;
  m1.src = &b->t1;
  m1.dst = &b->mono_v;
  for (int o = 0; o < b->t1.num_objects(); ++o)
    m1.obj_map.push_back(b->mono_info.obj_lookup.at(b->t1_info.obj_mono[o]));
  for (int a = 0; a < b->t1.num_arrows(); ++a)
    m1.arr_map.push_back(b->mono_info.arr_lookup.at({m1.obj_map[b->t1.arrows[a].dom],
                                                     m1.obj_map[b->t1.arrows[a].cod],
                                                     b->t1_info.arr_squares[a].second}));
  b->tuple.model = {identity_functor(b->v), m1};

  FunctorData om;
  om.src = &b->v;
  om.dst = &b->m_cat;
  for (int x = 0; x < b->v.num_objects(); ++x)
    om.obj_map.push_back(b->m_info.pair_object(x, one));
  for (int g = 0; g < b->v.num_arrows(); ++g)
    om.arr_map.push_back(b->m_info.pair_arrow(g, b->v.identity[one]));
  b->tuple.omega = om;

  IntervalData iv;
  iv.interval = b->v.find_object("2");
  iv.point0 = finset_arrow(b->v, 1, 2, {0});
  iv.point1 = finset_arrow(b->v, 1, 2, {1});
  iv.generators["lower"] = {iv.interval, b->t1_info.obj_lookup.at(iv.point0)};
  iv.generators["upper"] = {iv.interval, b->t1_info.obj_lookup.at(iv.point1)};
  std::string p0 = b->v.arrows[iv.point0].name, p1 = b->v.arrows[iv.point1].name;
  std::string c0 = b->v.arrows[finset_arrow(b->v, 2, 2, {0, 0})].name;
  std::string c1 = b->v.arrows[finset_arrow(b->v, 2, 2, {1, 1})].name;
  iv.axioms = {
      {"endpoints-disjoint", iv.interval, lt_meet(lt_gen("lower"), lt_gen("upper")),
       lt_bottom()},
      {"endpoints-cover", iv.interval, lt_join(lt_gen("lower"), lt_gen("upper")), lt_top()},
      {"zero-in-lower", one, lt_reindex(p0, lt_gen("lower")), lt_top()},
      {"zero-not-in-upper", one, lt_reindex(p0, lt_gen("upper")), lt_bottom()},
      {"one-in-upper", one, lt_reindex(p1, lt_gen("upper")), lt_top()},
      {"one-not-in-lower", one, lt_reindex(p1, lt_gen("lower")), lt_bottom()},
      {"zero-least", iv.interval, lt_reindex(c0, lt_gen("lower")), lt_top()},
      {"one-greatest", iv.interval, lt_reindex(c1, lt_gen("upper")), lt_top()},
  };
  iv.provenance = "packaged reconstruction";
  b->tuple.interval = iv;
  b->triple = {&b->phi_t, &b->phi_v, &b->phi_m};
  return b;
}

}  // namespace fq
