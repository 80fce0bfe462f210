#include "fq/model.hpp"

#include <algorithm>

namespace fq {

int MorphismClass::size() const {
  return static_cast<int>(std::count(member.begin(), member.end(), true));
}

MorphismClass class_all(const FinCategory& c) {
  return {"all", std::vector<bool>(c.num_arrows(), true)};
}

MorphismClass class_isos(const FinCategory& c) {
  MorphismClass m{"isos", std::vector<bool>(c.num_arrows(), false)};
  for (int f = 0; f < c.num_arrows(); ++f) m.member[f] = c.is_iso(f);
  return m;
}

MorphismClass class_identities(const FinCategory& c) {
  MorphismClass m{"identities", std::vector<bool>(c.num_arrows(), false)};
  for (int f = 0; f < c.num_arrows(); ++f) m.member[f] = c.is_identity(f);
  return m;
}

MorphismClass class_explicit(const FinCategory& c, const std::vector<int>& arrows,
                             const std::string& name) {
  MorphismClass m{name, std::vector<bool>(c.num_arrows(), false)};
  for (int f : arrows) m.member[f] = true;
  return m;
}

MorphismClass class_component_iso(const FinCategory& prod, const ProductCategoryInfo& info,
                                  const FinCategory& factor, int coord) {
  MorphismClass m{"component-iso " + std::to_string(coord),
                  std::vector<bool>(prod.num_arrows(), false)};
  for (int f = 0; f < prod.num_arrows(); ++f) {
    auto [a, b] = info.arr_parts[f];
    m.member[f] = factor.is_iso(coord == 0 ? a : b);
  }
  return m;
}

MorphismClass class_intersection(const MorphismClass& a, const MorphismClass& b) {
  MorphismClass m{a.name + "&" + b.name, a.member};
  for (size_t i = 0; i < m.member.size(); ++i)
    m.member[i] = m.member[i] && b.member[i];
  return m;
}

SquareLift find_lift(const FinCategory& c, int i, int p, int top, int bottom) {
  SquareLift r;
  if (c.arrows[top].dom != c.arrows[i].dom || c.arrows[top].cod != c.arrows[p].dom ||
      c.arrows[bottom].dom != c.arrows[i].cod || c.arrows[bottom].cod != c.arrows[p].cod)
    return r;
  if (c.compose(p, top) != c.compose(bottom, i)) return r;
  r.commutes = true;
  for (int d : c.hom(c.arrows[i].cod, c.arrows[p].dom))
    if (c.compose(d, i) == top && c.compose(p, d) == bottom) {
      r.lift = d;
      break;
    }
  return r;
}

bool lifts_against(const FinCategory& c, int i, int p) {
  for (int top : c.hom(c.arrows[i].dom, c.arrows[p].dom))
    for (int bottom : c.hom(c.arrows[i].cod, c.arrows[p].cod)) {
      if (c.compose(p, top) != c.compose(bottom, i)) continue;
      auto r = find_lift(c, i, p, top, bottom);
      if (!r.lift) return false;
    }
  return true;
}

Report verify_wfs(const FinCategory& c, const MorphismClass& L, const MorphismClass& R) {
  Report rep;
  rep.subject = "wfs (" + L.name + ", " + R.name + ") on " + c.name;

  bool fact = true;
  for (int f = 0; f < c.num_arrows() && fact; ++f) {
    bool found = false;
    for (int m = 0; m < c.num_objects() && !found; ++m)
      for (int l : c.hom(c.arrows[f].dom, m)) {
        if (!L.contains(l)) continue;
        for (int r : c.hom(m, c.arrows[f].cod))
          if (R.contains(r) && c.compose(r, l) == f) {
            found = true;
            break;
          }
        if (found) break;
      }
    if (!found) {
      rep.fail("factorization", c.arrows[f].name, "model/wfs");
      fact = false;
    }
  }
  if (fact) rep.pass("factorization", "model/wfs");

  bool lift = true;
  for (int i = 0; i < c.num_arrows() && lift; ++i) {
    if (!L.contains(i)) continue;
    for (int p = 0; p < c.num_arrows(); ++p)
      if (R.contains(p) && !lifts_against(c, i, p)) {
        rep.fail("lifting", c.arrows[i].name + " vs " + c.arrows[p].name, "model/wfs");
        lift = false;
        break;
      }
  }
  if (lift) rep.pass("lifting", "model/wfs");

  // closure equalities, not mere containment
  bool lclosed = true;
  for (int i = 0; i < c.num_arrows() && lclosed; ++i) {
    bool llp = true;
    for (int p = 0; p < c.num_arrows() && llp; ++p)
      if (R.contains(p)) llp = lifts_against(c, i, p);
    if (llp != L.contains(i)) {
      rep.fail("left-class-is-llp", c.arrows[i].name, "model/wfs");
      lclosed = false;
    }
  }
  if (lclosed) rep.pass("left-class-is-llp", "model/wfs");

  bool rclosed = true;
  for (int p = 0; p < c.num_arrows() && rclosed; ++p) {
    bool rlp = true;
    for (int i = 0; i < c.num_arrows() && rlp; ++i)
      if (L.contains(i)) rlp = lifts_against(c, i, p);
    if (rlp != R.contains(p)) {
      rep.fail("right-class-is-rlp", c.arrows[p].name, "model/wfs");
      rclosed = false;
    }
  }
  if (rclosed) rep.pass("right-class-is-rlp", "model/wfs");
  return rep;
}

Report verify_model_structure(const ModelStructureData& m) {
  Report rep;
  const FinCategory& c = *m.cat;
  rep.subject = "model structure on " + c.name;

  rep.merge(verify_wfs(c, class_intersection(m.C, m.W), m.F));
  rep.merge(verify_wfs(c, m.C, class_intersection(m.F, m.W)));

  bool two_of_three = true;
  for (int g = 0; g < c.num_arrows() && two_of_three; ++g)
    for (int f = 0; f < c.num_arrows(); ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      int count = m.W.contains(f) + m.W.contains(g) + m.W.contains(gf);
      if (count == 2) {
        rep.fail("two-of-three", c.arrows[g].name + "∘" + c.arrows[f].name, "model/axioms");
        two_of_three = false;
        break;
      }
    }
  if (two_of_three) rep.pass("two-of-three", "model/axioms");
  return rep;
}

namespace {

// f x U as an arrow dom(f)*U -> cod(f)*U through the chosen products
std::optional<int> times_member(const ProductTable& pt, int f, int u) {
  const FinCategory& c = pt.cat();
  auto pd = pt.product(c.arrows[f].dom, u);
  if (!pd) return std::nullopt;
  return pt.pairing(c.arrows[f].cod, u, c.compose(f, pd->p1), pd->p2);
}

}  // namespace

Report check_product_stability(const MorphismClass& s, const ProductTable& pt,
                               const Filter& phi) {
  Report rep;
  const FinCategory& c = pt.cat();
  rep.subject = "stability of " + s.name;
  bool ok = true;
  for (int f = 0; f < c.num_arrows() && ok; ++f) {
    if (!s.contains(f)) continue;
    for (int u : phi.members) {
      auto fu = times_member(pt, f, u);
      if (!fu || !s.contains(*fu)) {
        rep.fail("product-stable " + s.name, c.arrows[f].name + " x " + c.objects[u],
                 "model/filter");
        ok = false;
        break;
      }
    }
  }
  if (ok) rep.pass("product-stable " + s.name, "model/filter");
  return rep;
}

Report validate_model_filter(const ModelStructureData& m, const ProductTable& pt,
                             const Filter& phi) {
  Report rep;
  const FinCategory& c = *m.cat;
  rep.subject = "model filter on " + c.name;

  auto t = terminal_object(c);
  if (!t) {
    rep.fail("members-fibrant", "no terminal object", "model/filter");
    return rep;
  }
  bool fib = true;
  for (int u : phi.members) {
    int bang = c.hom(u, *t)[0];
    if (!m.F.contains(bang)) {
      rep.fail("members-fibrant", c.objects[u], "model/filter");
      fib = false;
    }
  }
  if (fib) rep.pass("members-fibrant", "model/filter");

  rep.merge(check_product_stability(m.C, pt, phi));
  rep.merge(check_product_stability(m.W, pt, phi));
  return rep;
}

TransferredModel transfer_model_structure(const ModelStructureData& m,
                                          const FilterQuotient& q) {
  TransferredModel out;
  const FinCategory& c = *m.cat;
  const FinCategory& qc = q.quotient;
  const ProductTable& pt = q.products();
  out.report.subject = "transferred model structure on " + qc.name;

  Report pre = validate_model_filter(m, pt, q.filter);
  out.report.merge(pre);
  if (!pre.ok()) return out;

  auto transfer = [&](const MorphismClass& s) {
    MorphismClass t{s.name + "@quot", std::vector<bool>(qc.num_arrows(), false)};
    for (int qf = 0; qf < qc.num_arrows(); ++qf) {
      int x = qc.arrows[qf].dom, y = qc.arrows[qf].cod;
      for (int u : q.filter.members) {
        for (int f : c.hom(pt.product(x, u)->obj, y)) {
          if (q.germ_of(x, u, f) != qf) continue;
          auto fu = pt.pairing(y, u, f, pt.product(x, u)->p2);
          if (fu && s.contains(*fu)) {
            t.member[qf] = true;
            break;
          }
        }
        if (t.member[qf]) break;
      }
    }
    return t;
  };
  out.model.cat = &qc;
  out.model.F = transfer(m.F);
  out.model.C = transfer(m.C);
  out.model.W = transfer(m.W);

  out.report.merge(verify_model_structure(out.model));

  // the projection preserves all three classes
  auto preserved = [&](const MorphismClass& s, const MorphismClass& sq) {
    for (int f = 0; f < c.num_arrows(); ++f)
      if (s.contains(f) && !sq.contains(q.project_arrow(f))) return f;
    return -1;
  };
  for (auto [s, sq] : {std::pair{&m.F, &out.model.F}, std::pair{&m.C, &out.model.C},
                       std::pair{&m.W, &out.model.W}}) {
    int bad = preserved(*s, *sq);
    out.report.add("projection-preserves " + s->name, bad < 0,
                   bad < 0 ? "" : c.arrows[bad].name, "model/transfer");
  }
  return out;
}

Report check_right_properness(const ModelStructureData& m) {
  Report rep;
  const FinCategory& c = *m.cat;
  rep.subject = "right properness of " + c.name;
  auto sh = shape_cospan();
  bool ok = true;
  std::size_t checked = 0, missing = 0;
  for (int w = 0; w < c.num_arrows() && ok; ++w) {
    if (!m.W.contains(w)) continue;
    for (int p = 0; p < c.num_arrows(); ++p) {
      if (!m.F.contains(p)) continue;
      if (c.arrows[p].cod != c.arrows[w].cod) continue;
      int z = c.arrows[w].cod;
      auto d = make_diagram(sh, c, {z, c.arrows[w].dom, c.arrows[p].dom},
                            {c.identity[z], c.identity[c.arrows[w].dom],
                             c.identity[c.arrows[p].dom], w, p});
      auto pb = limit(d);
      if (!pb) {
        ++missing;
        continue;  // pullback outside the fragment
      }
      ++checked;
      // legs: [z, dom w, dom p]; the base change of w is the leg into dom p
      if (!m.W.contains(pb->legs[2])) {
        rep.fail("pullback-of-weak-equivalence",
                 c.arrows[w].name + " along " + c.arrows[p].name, "model/right-proper");
        ok = false;
        break;
      }
    }
  }
  if (ok)
    rep.pass("pullback-of-weak-equivalence (" + std::to_string(checked) + " squares, " +
                 std::to_string(missing) + " outside fragment)",
             "model/right-proper");
  return rep;
}

}  // namespace fq
