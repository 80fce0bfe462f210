#include "fq/filtquot.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fq {

bool Filter::contains(int obj) const {
  return std::find(members.begin(), members.end(), obj) != members.end();
}

Report validate_filter(const SubterminalPoset& p, const std::vector<int>& members) {
  Report rep;
  rep.subject = "filter on " + p.cat->name;
  bool refs = true;
  for (int m : members)
    if (p.index_of(m) < 0) {
      rep.fail("member-is-subterminal-representative", p.cat->objects.at(m));
      refs = false;
    }
  if (!refs) return rep;
  rep.pass("members-in-poset");

  rep.add("non-empty", !members.empty(), "empty carrier");
  if (members.empty()) return rep;

  auto in = [&](int e) {
    return std::find(members.begin(), members.end(), e) != members.end();
  };
  bool up = true;
  for (int m : members)
    for (size_t j = 0; j < p.elems.size(); ++j)
      if (p.leq[p.index_of(m)][j] && !in(p.elems[j])) {
        rep.fail("upward-closed", p.cat->objects[m] + " <= " + p.cat->objects[p.elems[j]] +
                                      " but the larger element is missing");
        up = false;
      }
  if (up) rep.pass("upward-closed");

  bool directed = true;
  for (int a : members)
    for (int b : members) {
      bool found = false;
      for (int z : members)
        if (p.leq[p.index_of(z)][p.index_of(a)] && p.leq[p.index_of(z)][p.index_of(b)])
          found = true;
      if (!found) {
        rep.fail("downward-directed",
                 "no lower bound of " + p.cat->objects[a] + ", " + p.cat->objects[b]);
        directed = false;
      }
    }
  if (directed) rep.pass("downward-directed");
  return rep;
}

std::optional<Filter> make_filter(const SubterminalPoset& p, std::vector<int> members,
                                  Report* out_report) {
  Report rep = validate_filter(p, members);
  if (out_report) *out_report = rep;
  if (!rep.ok()) return std::nullopt;
  Filter f;
  f.poset = &p;
  f.members = std::move(members);
  // a finite directed filter has a least member
  for (int m : f.members) {
    bool least = true;
    for (int o : f.members)
      if (!p.leq[p.index_of(m)][p.index_of(o)]) least = false;
    if (least) {
      f.minimum = m;
      break;
    }
  }
  if (f.minimum == FinCategory::kNone) {
    if (out_report) out_report->fail("least-member", "directed finite filter without minimum");
    return std::nullopt;
  }
  return f;
}

std::optional<Filter> trivial_filter(const SubterminalPoset& p) {
  for (size_t i = 0; i < p.elems.size(); ++i) {
    bool top = true;
    for (size_t j = 0; j < p.elems.size(); ++j)
      if (!p.leq[j][i]) top = false;
    if (top) return make_filter(p, {p.elems[i]});
  }
  return std::nullopt;
}

std::optional<Filter> principal_filter(const SubterminalPoset& p, int u) {
  int i = p.index_of(u);
  if (i < 0) i = p.index_of(p.representative(u));
  if (i < 0) return std::nullopt;
  std::vector<int> mem;
  for (size_t j = 0; j < p.elems.size(); ++j)
    if (p.leq[i][j]) mem.push_back(p.elems[j]);
  return make_filter(p, mem);
}

// ---- quotient ----

int FilterQuotient::restrict_rep(int f, int x, int u, int w) const {
  if (u == w) return f;
  const FinCategory& c = *base;
  int i = c.hom(w, u)[0];  // unique arrow between subterminals
  auto pxw = products_->product(x, w);
  auto m = products_->pairing(x, u, pxw->p1, c.compose(i, pxw->p2));
  return c.compose(f, *m);
}

int FilterQuotient::germ_of(int x, int u, int f) const {
  auto it = class_of_.find({x, u, f});
  return it == class_of_.end() ? FinCategory::kNone : it->second;
}

int FilterQuotient::project_arrow(int f) const { return proj_arr_[f]; }

FunctorData FilterQuotient::projection() const {
  FunctorData p;
  p.src = base;
  p.dst = &quotient;
  for (int o = 0; o < base->num_objects(); ++o) p.obj_map.push_back(o);
  p.arr_map = proj_arr_;
  return p;
}

bool germ_eq(const FinCategory& c, const ProductTable& pt, const Filter& phi, int x,
             const GermMorphism& a, const GermMorphism& b) {
  // existential over filter members below both representatives
  for (int w : phi.members) {
    if (c.hom(w, a.u).empty() || c.hom(w, b.u).empty()) continue;
    auto restrict = [&](const GermMorphism& g) {
      if (g.u == w) return g.rep;
      int i = c.hom(w, g.u)[0];
      auto pxw = pt.product(x, w);
      auto m = pt.pairing(x, g.u, pxw->p1, c.compose(i, pxw->p2));
      return c.compose(g.rep, *m);
    };
    if (restrict(a) == restrict(b)) return true;
  }
  return false;
}

std::optional<FilterQuotient> filter_quotient(const FinCategory& c, const Filter& phi,
                                              Report* out_report) {
  Report rep;
  rep.subject = "filter quotient of " + c.name;
  auto done = [&]() -> std::optional<FilterQuotient> {
    if (out_report) *out_report = rep;
    return std::nullopt;
  };

  FilterQuotient q;
  q.base = &c;
  q.filter = phi;
  q.w0 = phi.minimum;
  q.products_ = std::make_shared<ProductTable>(c);
  const ProductTable& pt = *q.products_;

  bool prods = true;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int u : phi.members)
      if (!pt.product(x, u)) {
        rep.fail("products-with-members-exist", c.objects[x] + " * " + c.objects[u]);
        prods = false;
      }
  if (!prods) return done();
  rep.pass("products-with-members-exist");

  // saturation: one germ per (x, u in Phi, f: x*u -> y), classed by agreement
  // on some member; cross-checked against restriction to the least member
  FinCategory& qc = q.quotient;
  qc.name = c.name + "@quot";
  qc.objects = c.objects;
  std::map<std::tuple<int, int, int>, int> qid;  // (x, y, rep at w0) -> arrow
  bool saturation_ok = true;
  for (int x = 0; x < c.num_objects(); ++x) {
    int pxw0 = pt.product(x, q.w0)->obj;
    for (int y = 0; y < c.num_objects(); ++y) {
      for (int r : c.hom(pxw0, y)) {
        qid[{x, y, r}] = qc.num_arrows();
        q.canonical_rep.push_back(r);
        q.germ_src.push_back(x);
        q.germ_cod.push_back(y);
        qc.arrows.push_back(
            {"g[" + c.objects[x] + ">" + c.objects[y] + ":" + c.arrows[r].name + "]", x, y});
      }
      // class every representative and check the two notions agree
      std::vector<GermMorphism> reps;
      for (int u : phi.members)
        for (int f : c.hom(pt.product(x, u)->obj, y)) reps.push_back({u, f});
      for (auto& g : reps) {
        int r0 = q.restrict_rep(g.rep, x, g.u, q.w0);
        q.class_of_[{x, g.u, g.rep}] = qid.at({x, y, r0});
      }
      for (size_t i = 0; i < reps.size() && saturation_ok; ++i)
        for (size_t j = 0; j < reps.size(); ++j) {
          bool eq = germ_eq(c, pt, phi, x, reps[i], reps[j]);
          bool same = q.class_of_.at({x, reps[i].u, reps[i].rep}) ==
                      q.class_of_.at({x, reps[j].u, reps[j].rep});
          if (eq != same) {
            rep.fail("saturation-matches-least-member-restriction",
                     c.arrows[reps[i].rep].name + " vs " + c.arrows[reps[j].rep].name);
            saturation_ok = false;
            break;
          }
        }
    }
  }
  if (!saturation_ok) return done();
  rep.pass("saturation-matches-least-member-restriction");

  qc.identity.assign(qc.num_objects(), -1);
  for (int x = 0; x < c.num_objects(); ++x)
    qc.identity[x] = qid.at({x, x, pt.product(x, q.w0)->p1});

  qc.table.assign(qc.num_arrows(), std::vector<int>(qc.num_arrows(), FinCategory::kNone));
  for (int qg = 0; qg < qc.num_arrows(); ++qg)
    for (int qf = 0; qf < qc.num_arrows(); ++qf) {
      if (qc.arrows[qf].cod != qc.arrows[qg].dom) continue;
      int x = qc.arrows[qf].dom, y = qc.arrows[qf].cod, z = qc.arrows[qg].cod;
      int f = q.canonical_rep[qf], g = q.canonical_rep[qg];
      auto pxw = pt.product(x, q.w0);
      auto fw = pt.pairing(y, q.w0, f, pxw->p2);  // <f, pi_w0> : x*w0 -> y*w0
      qc.table[qg][qf] = qid.at({x, z, c.compose(g, *fw)});
    }
  qc.finalize();

  // well-definedness: composing any pair of representatives at any common
  // lower member lands in the composite class computed from canonical ones
  bool wd = true;
  for (int qf = 0; qf < qc.num_arrows() && wd; ++qf) {
    int x = qc.arrows[qf].dom, y = qc.arrows[qf].cod;
    for (int z = 0; z < qc.num_objects() && wd; ++z)
      for (int qg : qc.hom(y, z)) {
        int expect = qc.table[qg][qf];
        for (int u : phi.members) {
          for (int f1 : c.hom(pt.product(x, u)->obj, y)) {
            if (q.class_of_.at({x, u, f1}) != qf) continue;
            for (int v : phi.members)
              for (int g1 : c.hom(pt.product(y, v)->obj, z)) {
                if (q.class_of_.at({y, v, g1}) != qg) continue;
                for (int w : phi.members) {
                  if (c.hom(w, u).empty() || c.hom(w, v).empty()) continue;
                  int f1w = q.restrict_rep(f1, x, u, w);
                  int iv = c.hom(w, v)[0];
                  auto pxw = pt.product(x, w);
                  auto mid = pt.pairing(y, v, f1w, c.compose(iv, pxw->p2));
                  int comp = c.compose(g1, *mid);
                  if (q.class_of_.at({x, w, comp}) != expect) {
                    rep.fail("composition-representative-independent",
                             c.arrows[f1].name + " ; " + c.arrows[g1].name + " at " +
                                 c.objects[w]);
                    wd = false;
                  }
                }
              }
          }
        }
      }
  }
  if (!wd) return done();
  rep.pass("composition-representative-independent");

  Report cat_rep = validate_category(to_raw(qc));
  rep.merge(cat_rep);
  if (!cat_rep.ok()) return done();

  // projection: identity on objects, f -> germ of f∘pi_x over the least member
  q.proj_arr_.assign(c.num_arrows(), -1);
  for (int h = 0; h < c.num_arrows(); ++h) {
    int x = c.arrows[h].dom;
    q.proj_arr_[h] = qid.at({x, c.arrows[h].cod, c.compose(h, pt.product(x, q.w0)->p1)});
  }
  Report fun_rep = validate_functor(q.projection());
  rep.add("projection-functorial", fun_rep.ok(), fun_rep.first_failure());
  if (!fun_rep.ok()) return done();

  if (out_report) *out_report = rep;
  return q;
}

// ---- projection verification ----

namespace {

void for_each_diagram(const FinCategory& shape, const FinCategory& target, std::size_t cap,
                      const std::function<void(const DiagramData&)>& cb) {
  std::size_t emitted = 0;
  std::vector<int> obj_map(shape.num_objects(), -1);
  std::vector<int> arr_map(shape.num_arrows(), -1);
  std::vector<int> free_arrows;
  for (int f = 0; f < shape.num_arrows(); ++f)
    if (!shape.is_identity(f)) free_arrows.push_back(f);

  std::function<void(std::size_t)> arrows = [&](std::size_t i) {
    if (emitted >= cap) return;
    if (i == free_arrows.size()) {
      DiagramData d{&shape, &target, obj_map, arr_map};
      if (is_functor(d)) {
        ++emitted;
        cb(d);
      }
      return;
    }
    int f = free_arrows[i];
    for (int g : target.hom(obj_map[shape.arrows[f].dom], obj_map[shape.arrows[f].cod])) {
      arr_map[f] = g;
      arrows(i + 1);
      if (emitted >= cap) return;
    }
    arr_map[f] = -1;
  };
  std::function<void(int)> objects = [&](int i) {
    if (emitted >= cap) return;
    if (i == shape.num_objects()) {
      for (int o = 0; o < shape.num_objects(); ++o)
        arr_map[shape.identity[o]] = target.identity[obj_map[o]];
      arrows(0);
      return;
    }
    for (int t = 0; t < target.num_objects(); ++t) {
      obj_map[i] = t;
      objects(i + 1);
      if (emitted >= cap) return;
    }
    obj_map[i] = -1;
  };
  objects(0);
}

}  // namespace

Report verify_projection(const FilterQuotient& q, const ProjectionCheckOptions& opts) {
  Report rep;
  const FinCategory& c = *q.base;
  const FinCategory& qc = q.quotient;
  rep.subject = "projection of " + c.name;

  struct NamedShape {
    std::string name;
    FinCategory cat;
  };
  std::vector<NamedShape> shapes;
  shapes.push_back({"empty", shape_empty()});
  shapes.push_back({"point", shape_point()});
  shapes.push_back({"discrete-pair", shape_discrete(2)});
  shapes.push_back({"arrow", shape_arrow()});
  shapes.push_back({"parallel-pair", shape_parallel_pair()});
  shapes.push_back({"span", shape_span()});
  shapes.push_back({"cospan", shape_cospan()});

  for (auto& sh : shapes) {
    std::size_t existing = 0, preserved = 0, co_existing = 0, co_preserved = 0;
    std::string witness;
    for_each_diagram(sh.cat, c, opts.max_diagrams_per_shape, [&](const DiagramData& d) {
      DiagramData dq = d;
      dq.dst = &qc;
      for (auto& a : dq.arr_map) a = q.project_arrow(a);
      if (auto l = limit(d)) {
        ++existing;
        Cone img{l->apex, l->legs};
        for (auto& leg : img.legs) leg = q.project_arrow(leg);
        if (is_limit(dq, img))
          ++preserved;
        else if (witness.empty())
          witness = "limit apex " + c.objects[l->apex];
      }
      if (auto cl = colimit(d)) {
        ++co_existing;
        Cone img{cl->apex, cl->legs};
        for (auto& leg : img.legs) leg = q.project_arrow(leg);
        if (is_colimit(dq, img))
          ++co_preserved;
        else if (witness.empty())
          witness = "colimit apex " + c.objects[cl->apex];
      }
    });
    std::ostringstream tag;
    tag << "limits-" << sh.name << " (" << preserved << "/" << existing << " limits, "
        << co_preserved << "/" << co_existing << " colimits)";
    rep.add(tag.str(), preserved == existing && co_preserved == co_existing, witness,
            "filter-quotient/preservation");
  }

  bool monos = true;
  for (int f = 0; f < c.num_arrows() && monos; ++f)
    if (c.is_mono(f) && !qc.is_mono(q.project_arrow(f))) {
      rep.fail("monomorphisms-preserved", c.arrows[f].name, "filter-quotient/preservation");
      monos = false;
    }
  if (monos) rep.pass("monomorphisms-preserved", "filter-quotient/preservation");

  // products in the quotient are images of products in the base
  const ProductTable& pt = q.products();
  bool prods = true;
  std::size_t prod_existing = 0;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y)
      if (auto bp = pt.product(x, y)) {
        ++prod_existing;
        BinaryProduct img{bp->obj, q.project_arrow(bp->p1), q.project_arrow(bp->p2)};
        if (!is_binary_product(qc, x, y, img)) {
          rep.fail("binary-products-preserved", c.objects[x] + " * " + c.objects[y],
                   "filter-quotient/preservation");
          prods = false;
        }
      }
  if (prods)
    rep.pass("binary-products-preserved (" + std::to_string(prod_existing) + " pairs)",
             "filter-quotient/preservation");

  bool exps = true;
  std::size_t exp_existing = 0;
  for (int x = 0; x < c.num_objects() && exps; ++x)
    for (int y = 0; y < c.num_objects(); ++y) {
      auto e = exponential(pt, x, y);
      if (!e) continue;
      ++exp_existing;
      auto pex = pt.product(e->obj, x);
      Exponential img{e->obj, q.project_arrow(e->ev)};
      BinaryProduct pimg{pex->obj, q.project_arrow(pex->p1), q.project_arrow(pex->p2)};
      ProductTable qpt(qc);
      if (!is_exponential(qpt, x, y, img, pimg)) {
        rep.fail("exponentials-preserved", c.objects[y] + "^" + c.objects[x],
                 "filter-quotient/preservation");
        exps = false;
        break;
      }
    }
  if (exps)
    rep.pass("exponentials-preserved (" + std::to_string(exp_existing) + " found)",
             "filter-quotient/preservation");

  if (auto sc = subobject_classifier(c)) {
    SubobjectClassifier img{sc->omega, q.project_arrow(sc->truth)};
    rep.add("subobject-classifier-preserved", is_subobject_classifier(qc, img),
            qc.objects[sc->omega], "filter-quotient/preservation");
  } else {
    rep.pass("subobject-classifier-preserved (none in base)",
             "filter-quotient/preservation");
  }
  return rep;
}

Report germ_mono_characterization(const FilterQuotient& q) {
  Report rep;
  const FinCategory& c = *q.base;
  const FinCategory& qc = q.quotient;
  const ProductTable& pt = q.products();
  rep.subject = "germ monos of " + qc.name;
  bool ok = true;
  for (int qf = 0; qf < qc.num_arrows(); ++qf) {
    int x = qc.arrows[qf].dom, y = qc.arrows[qf].cod;
    bool lhs = qc.is_mono(qf);
    bool rhs = false;
    for (int u : q.filter.members) {
      auto pxu = pt.product(x, u);
      for (int f : c.hom(pxu->obj, y)) {
        if (q.germ_of(x, u, f) != qf) continue;
        // f x U : x*u -> y*u
        auto fu = pt.pairing(y, u, f, pxu->p2);
        if (fu && c.is_mono(*fu)) {
          rhs = true;
          break;
        }
      }
      if (rhs) break;
    }
    if (lhs != rhs) {
      rep.fail("germ-mono-iff-member-mono", qc.arrows[qf].name, "filter-quotient/germ-mono");
      ok = false;
    }
  }
  if (ok) rep.pass("germ-mono-iff-member-mono", "filter-quotient/germ-mono");
  return rep;
}

}  // namespace fq
