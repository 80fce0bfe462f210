#include "fq/fincat.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fq {

void FinCategory::finalize() {
  int n = num_objects();
  hom_index_.assign(n * n, {});
  for (int f = 0; f < num_arrows(); ++f)
    hom_index_[arrows[f].dom * n + arrows[f].cod].push_back(f);
}

const std::vector<int>& FinCategory::hom(int x, int y) const {
  return hom_index_[x * num_objects() + y];
}

int FinCategory::find_object(const std::string& n) const {
  for (int i = 0; i < num_objects(); ++i)
    if (objects[i] == n) return i;
  return kNone;
}

int FinCategory::find_arrow(const std::string& n) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].name == n) return i;
  return kNone;
}

std::optional<int> FinCategory::inverse(int f) const {
  for (int g : hom(arrows[f].cod, arrows[f].dom))
    if (compose(g, f) == identity[arrows[f].dom] && compose(f, g) == identity[arrows[f].cod])
      return g;
  return std::nullopt;
}

bool FinCategory::is_iso(int f) const { return inverse(f).has_value(); }

bool FinCategory::is_mono(int f) const {
  // f mono iff f∘g = f∘h implies g = h, over all parallel pairs into dom(f)
  int d = arrows[f].dom;
  for (int a = 0; a < num_objects(); ++a) {
    const auto& hs = hom(a, d);
    for (size_t i = 0; i < hs.size(); ++i)
      for (size_t j = i + 1; j < hs.size(); ++j)
        if (compose(f, hs[i]) == compose(f, hs[j])) return false;
  }
  return true;
}

bool FinCategory::is_epi(int f) const {
  int c = arrows[f].cod;
  for (int b = 0; b < num_objects(); ++b) {
    const auto& hs = hom(c, b);
    for (size_t i = 0; i < hs.size(); ++i)
      for (size_t j = i + 1; j < hs.size(); ++j)
        if (compose(hs[i], f) == compose(hs[j], f)) return false;
  }
  return true;
}

bool FinCategory::iso_objects(int x, int y) const {
  if (x == y) return true;
  for (int f : hom(x, y))
    if (is_iso(f)) return true;
  return false;
}

// ---- validation ----

Report validate_category(const RawCategory& raw) {
  Report rep;
  rep.subject = "category " + raw.name;

  auto obj_id = [&](const std::string& n) -> int {
    for (size_t i = 0; i < raw.objects.size(); ++i)
      if (raw.objects[i] == n) return static_cast<int>(i);
    return -1;
  };
  auto arr_id = [&](const std::string& n) -> int {
    for (size_t i = 0; i < raw.arrows.size(); ++i)
      if (raw.arrows[i].name == n) return static_cast<int>(i);
    return -1;
  };

  bool refs_ok = true;
  for (auto& a : raw.arrows) {
    if (obj_id(a.dom) < 0) {
      rep.fail("arrow-domain-declared", a.name + ": unknown object " + a.dom);
      refs_ok = false;
    }
    if (obj_id(a.cod) < 0) {
      rep.fail("arrow-codomain-declared", a.name + ": unknown object " + a.cod);
      refs_ok = false;
    }
  }
  for (auto& [o, f] : raw.identities) {
    if (obj_id(o) < 0) {
      rep.fail("identity-object-declared", o);
      refs_ok = false;
    }
    if (arr_id(f) < 0) {
      rep.fail("identity-arrow-declared", f);
      refs_ok = false;
    }
  }
  for (auto& c : raw.composites)
    for (auto& n : {c.g, c.f, c.gf})
      if (arr_id(n) < 0) {
        rep.fail("composite-arrow-declared", n);
        refs_ok = false;
      }
  if (!refs_ok) return rep;
  rep.pass("references-resolve");

  int no = static_cast<int>(raw.objects.size());
  int na = static_cast<int>(raw.arrows.size());
  std::vector<int> ident(no, -1);
  for (auto& [o, f] : raw.identities) {
    int oi = obj_id(o), fi = arr_id(f);
    if (ident[oi] >= 0 && ident[oi] != fi)
      rep.fail("identity-unique", o + " has two identities");
    ident[oi] = fi;
    if (obj_id(raw.arrows[fi].dom) != oi || obj_id(raw.arrows[fi].cod) != oi)
      rep.fail("identity-endpoints", f + " is not an endomorphism of " + o);
  }
  bool all_ids = true;
  for (int o = 0; o < no; ++o)
    if (ident[o] < 0) {
      rep.fail("identity-assigned", raw.objects[o]);
      all_ids = false;
    }
  if (!all_ids) return rep;
  rep.pass("identities-assigned");

  std::vector<std::vector<int>> table(na, std::vector<int>(na, FinCategory::kNone));
  bool table_ok = true;
  for (auto& c : raw.composites) {
    int g = arr_id(c.g), f = arr_id(c.f), gf = arr_id(c.gf);
    if (obj_id(raw.arrows[f].cod) != obj_id(raw.arrows[g].dom)) {
      rep.fail("composite-composable", c.g + "∘" + c.f + " declared but not composable");
      table_ok = false;
      continue;
    }
    if (obj_id(raw.arrows[gf].dom) != obj_id(raw.arrows[f].dom) ||
        obj_id(raw.arrows[gf].cod) != obj_id(raw.arrows[g].cod)) {
      rep.fail("composite-endpoints", c.g + "∘" + c.f + " = " + c.gf + " has wrong endpoints");
      table_ok = false;
      continue;
    }
    if (table[g][f] != FinCategory::kNone && table[g][f] != gf) {
      rep.fail("composite-unique", c.g + "∘" + c.f + " defined twice");
      table_ok = false;
    }
    table[g][f] = gf;
  }
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (obj_id(raw.arrows[f].cod) == obj_id(raw.arrows[g].dom) &&
          table[g][f] == FinCategory::kNone) {
        rep.fail("composition-total",
                 raw.arrows[g].name + "∘" + raw.arrows[f].name + " undefined");
        table_ok = false;
      }
  if (!table_ok) return rep;
  rep.pass("composition-table-total");

  bool id_laws = true;
  for (int f = 0; f < na; ++f) {
    int d = obj_id(raw.arrows[f].dom), c = obj_id(raw.arrows[f].cod);
    if (table[f][ident[d]] != f) {
      rep.fail("identity-law-right", raw.arrows[f].name);
      id_laws = false;
    }
    if (table[ident[c]][f] != f) {
      rep.fail("identity-law-left", raw.arrows[f].name);
      id_laws = false;
    }
  }
  if (id_laws) rep.pass("identity-laws");

  bool assoc = true;
  for (int h = 0; h < na && assoc; ++h)
    for (int g = 0; g < na; ++g) {
      if (obj_id(raw.arrows[g].cod) != obj_id(raw.arrows[h].dom)) continue;
      for (int f = 0; f < na; ++f) {
        if (obj_id(raw.arrows[f].cod) != obj_id(raw.arrows[g].dom)) continue;
        if (table[table[h][g]][f] != table[h][table[g][f]]) {
          rep.fail("associativity", "(" + raw.arrows[h].name + "∘" + raw.arrows[g].name +
                                        ")∘" + raw.arrows[f].name);
          assoc = false;
        }
      }
    }
  if (assoc) rep.pass("associativity");
  return rep;
}

std::optional<FinCategory> build_category(const RawCategory& raw, Report* out_report) {
  Report rep = validate_category(raw);
  if (out_report) *out_report = rep;
  if (!rep.ok()) return std::nullopt;

  FinCategory c;
  c.name = raw.name;
  c.objects = raw.objects;
  for (auto& a : raw.arrows)
    c.arrows.push_back({a.name, c.find_object(a.dom), c.find_object(a.cod)});
  c.identity.assign(c.num_objects(), -1);
  for (auto& [o, f] : raw.identities) c.identity[c.find_object(o)] = c.find_arrow(f);
  c.table.assign(c.num_arrows(), std::vector<int>(c.num_arrows(), FinCategory::kNone));
  for (auto& comp : raw.composites)
    c.table[c.find_arrow(comp.g)][c.find_arrow(comp.f)] = c.find_arrow(comp.gf);
  c.finalize();
  return c;
}

RawCategory to_raw(const FinCategory& c) {
  RawCategory raw;
  raw.name = c.name;
  raw.objects = c.objects;
  for (auto& a : c.arrows) raw.arrows.push_back({a.name, c.objects[a.dom], c.objects[a.cod]});
  for (int o = 0; o < c.num_objects(); ++o)
    raw.identities.emplace_back(c.objects[o], c.arrows[c.identity[o]].name);
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f = 0; f < c.num_arrows(); ++f)
      if (c.table[g][f] != FinCategory::kNone)
        raw.composites.push_back(
            {c.arrows[g].name, c.arrows[f].name, c.arrows[c.table[g][f]].name});
  return raw;
}

// ---- finset ----

namespace {

std::string finset_name(int dom, int cod, const std::vector<int>& images) {
  std::ostringstream os;
  os << "f" << dom << "to" << cod << ":";
  for (int v : images) os << v;
  if (images.empty()) os << "-";
  return os.str();
}

}  // namespace

FinCategory finset_category(int k) {
  FinCategory c;
  c.name = "finset" + std::to_string(k);
  for (int n = 0; n <= k; ++n) c.objects.push_back(std::to_string(n));

  // enumerate all functions m -> n for m, n <= k
  std::map<std::tuple<int, int, std::vector<int>>, int> lookup;
  std::vector<std::vector<int>> imgs;
  for (int m = 0; m <= k; ++m)
    for (int n = 0; n <= k; ++n) {
      if (m > 0 && n == 0) continue;
      std::vector<int> img(m, 0);
      while (true) {
        lookup[{m, n, img}] = c.num_arrows();
        imgs.push_back(img);
        c.arrows.push_back({finset_name(m, n, img), m, n});
        int i = m - 1;  // advance tuple in base n
        while (i >= 0 && img[i] == n - 1) img[i--] = 0;
        if (i < 0) break;
        ++img[i];
      }
    }

  c.identity.assign(c.num_objects(), -1);
  for (int n = 0; n <= k; ++n) {
    std::vector<int> idimg(n);
    for (int i = 0; i < n; ++i) idimg[i] = i;
    c.identity[n] = lookup.at({n, n, idimg});
  }

  c.table.assign(c.num_arrows(), std::vector<int>(c.num_arrows(), FinCategory::kNone));
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f = 0; f < c.num_arrows(); ++f) {
      if (c.arrows[f].cod != c.arrows[g].dom) continue;
      std::vector<int> comp(imgs[f].size());
      for (size_t i = 0; i < imgs[f].size(); ++i) comp[i] = imgs[g][imgs[f][i]];
      c.table[g][f] = lookup.at({c.arrows[f].dom, c.arrows[g].cod, comp});
    }
  c.finalize();
  return c;
}

std::vector<int> finset_arrow_images(const FinCategory& c, int f) {
  std::vector<int> v;
  const std::string& nm = c.arrows[f].name;
  auto pos = nm.find(':');
  for (size_t i = pos + 1; i < nm.size(); ++i)
    if (nm[i] != '-') v.push_back(nm[i] - '0');
  return v;
}

int finset_arrow(const FinCategory& c, int dom_size, int cod_size,
                 const std::vector<int>& images) {
  return c.find_arrow(finset_name(dom_size, cod_size, images));
}

// ---- product / power ----

int ProductCategoryInfo::pair_object(int a, int b) const {
  auto it = obj_lookup_.find({a, b});
  return it == obj_lookup_.end() ? FinCategory::kNone : it->second;
}
int ProductCategoryInfo::pair_arrow(int f, int g) const {
  auto it = arr_lookup_.find({f, g});
  return it == arr_lookup_.end() ? FinCategory::kNone : it->second;
}

FinCategory product_category(const FinCategory& a, const FinCategory& b,
                             ProductCategoryInfo* info) {
  FinCategory c;
  c.name = a.name + "*" + b.name;
  ProductCategoryInfo local;
  ProductCategoryInfo& pi = info ? *info : local;
  for (int i = 0; i < a.num_objects(); ++i)
    for (int j = 0; j < b.num_objects(); ++j) {
      pi.obj_lookup_[{i, j}] = c.num_objects();
      pi.obj_parts.emplace_back(i, j);
      c.objects.push_back("(" + a.objects[i] + "," + b.objects[j] + ")");
    }
  for (int f = 0; f < a.num_arrows(); ++f)
    for (int g = 0; g < b.num_arrows(); ++g) {
      pi.arr_lookup_[{f, g}] = c.num_arrows();
      pi.arr_parts.emplace_back(f, g);
      c.arrows.push_back({"(" + a.arrows[f].name + "," + b.arrows[g].name + ")",
                          pi.pair_object(a.arrows[f].dom, b.arrows[g].dom),
                          pi.pair_object(a.arrows[f].cod, b.arrows[g].cod)});
    }
  c.identity.assign(c.num_objects(), -1);
  for (int o = 0; o < c.num_objects(); ++o) {
    auto [i, j] = pi.obj_parts[o];
    c.identity[o] = pi.pair_arrow(a.identity[i], b.identity[j]);
  }
  c.table.assign(c.num_arrows(), std::vector<int>(c.num_arrows(), FinCategory::kNone));
  for (int p = 0; p < c.num_arrows(); ++p)
    for (int q = 0; q < c.num_arrows(); ++q) {
      if (c.arrows[q].cod != c.arrows[p].dom) continue;
      auto [f1, g1] = pi.arr_parts[p];
      auto [f2, g2] = pi.arr_parts[q];
      c.table[p][q] = pi.pair_arrow(a.compose(f1, f2), b.compose(g1, g2));
    }
  c.finalize();
  return c;
}

FinCategory power_category(const FinCategory& c, int n, PowerCategoryInfo* info) {
  FinCategory p;
  p.name = c.name + "^" + std::to_string(n);
  PowerCategoryInfo local;
  PowerCategoryInfo& pi = info ? *info : local;

  std::vector<int> tup(n, 0);
  auto enumerate = [&](int limit, auto&& emit) {
    std::fill(tup.begin(), tup.end(), 0);
    if (n == 0) {
      emit(tup);
      return;
    }
    while (true) {
      emit(tup);
      int i = n - 1;
      while (i >= 0 && tup[i] == limit - 1) tup[i--] = 0;
      if (i < 0) break;
      ++tup[i];
    }
  };

  enumerate(c.num_objects(), [&](const std::vector<int>& t) {
    pi.obj_lookup[t] = p.num_objects();
    pi.obj_parts.push_back(t);
    std::string nm = "(";
    for (int i = 0; i < n; ++i) nm += (i ? "," : "") + c.objects[t[i]];
    p.objects.push_back(nm + ")");
  });
  enumerate(c.num_arrows(), [&](const std::vector<int>& t) {
    std::vector<int> d(n), k(n);
    for (int i = 0; i < n; ++i) {
      d[i] = c.arrows[t[i]].dom;
      k[i] = c.arrows[t[i]].cod;
    }
    pi.arr_lookup[t] = p.num_arrows();
    pi.arr_parts.push_back(t);
    std::string nm = "(";
    for (int i = 0; i < n; ++i) nm += (i ? "," : "") + c.arrows[t[i]].name;
    p.arrows.push_back({nm + ")", pi.obj_lookup[d], pi.obj_lookup[k]});
  });
  p.identity.assign(p.num_objects(), -1);
  for (int o = 0; o < p.num_objects(); ++o) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = c.identity[pi.obj_parts[o][i]];
    p.identity[o] = pi.arr_lookup[t];
  }
  p.table.assign(p.num_arrows(), std::vector<int>(p.num_arrows(), FinCategory::kNone));
  for (int g = 0; g < p.num_arrows(); ++g)
    for (int f = 0; f < p.num_arrows(); ++f) {
      if (p.arrows[f].cod != p.arrows[g].dom) continue;
      std::vector<int> t(n);
      for (int i = 0; i < n; ++i) t[i] = c.compose(pi.arr_parts[g][i], pi.arr_parts[f][i]);
      p.table[g][f] = pi.arr_lookup[t];
    }
  p.finalize();
  return p;
}

FinCategory arrow_category(const FinCategory& c, ArrowCategoryInfo* info) {
  FinCategory ac;
  ac.name = c.name + "^arrow";
  ArrowCategoryInfo local;
  ArrowCategoryInfo& ai = info ? *info : local;
  for (int f = 0; f < c.num_arrows(); ++f) {
    ai.obj_arrow.push_back(f);
    ac.objects.push_back("[" + c.arrows[f].name + "]");
  }
  // morphisms f -> g: commuting squares (a: dom f -> dom g, b: cod f -> cod g)
  std::map<std::tuple<int, int, int, int>, int> sq_lookup;
  std::vector<std::pair<int, int>> sq_objs;
  for (int f = 0; f < c.num_arrows(); ++f)
    for (int g = 0; g < c.num_arrows(); ++g)
      for (int a : c.hom(c.arrows[f].dom, c.arrows[g].dom))
        for (int b : c.hom(c.arrows[f].cod, c.arrows[g].cod))
          if (c.compose(g, a) == c.compose(b, f)) {
            sq_lookup[{f, g, a, b}] = ac.num_arrows();
            sq_objs.emplace_back(f, g);
            ai.arr_squares.emplace_back(a, b);
            ac.arrows.push_back(
                {"sq(" + c.arrows[a].name + ";" + c.arrows[b].name + ")", f, g});
          }
  ac.identity.assign(ac.num_objects(), -1);
  for (int f = 0; f < c.num_arrows(); ++f)
    ac.identity[f] =
        sq_lookup.at({f, f, c.identity[c.arrows[f].dom], c.identity[c.arrows[f].cod]});
  ac.table.assign(ac.num_arrows(), std::vector<int>(ac.num_arrows(), FinCategory::kNone));
  for (int p = 0; p < ac.num_arrows(); ++p)
    for (int q = 0; q < ac.num_arrows(); ++q) {
      if (ac.arrows[q].cod != ac.arrows[p].dom) continue;
      auto [a1, b1] = ai.arr_squares[p];
      auto [a2, b2] = ai.arr_squares[q];
      ac.table[p][q] = sq_lookup.at({ac.arrows[q].dom, ac.arrows[p].cod,
                                     c.compose(a1, a2), c.compose(b1, b2)});
    }
  ac.finalize();
  return ac;
}

FinCategory full_subcategory(const FinCategory& c, const std::vector<int>& objs,
                             std::vector<int>* obj_back) {
  FinCategory s;
  s.name = c.name + "|sub";
  std::vector<int> oback, aback;
  std::vector<int> omap(c.num_objects(), -1), amap(c.num_arrows(), -1);
  for (int o : objs) {
    omap[o] = s.num_objects();
    oback.push_back(o);
    s.objects.push_back(c.objects[o]);
  }
  for (int f = 0; f < c.num_arrows(); ++f)
    if (omap[c.arrows[f].dom] >= 0 && omap[c.arrows[f].cod] >= 0) {
      amap[f] = s.num_arrows();
      aback.push_back(f);
      s.arrows.push_back({c.arrows[f].name, omap[c.arrows[f].dom], omap[c.arrows[f].cod]});
    }
  s.identity.assign(s.num_objects(), -1);
  for (size_t i = 0; i < oback.size(); ++i) s.identity[i] = amap[c.identity[oback[i]]];
  s.table.assign(s.num_arrows(), std::vector<int>(s.num_arrows(), FinCategory::kNone));
  for (size_t g = 0; g < aback.size(); ++g)
    for (size_t f = 0; f < aback.size(); ++f) {
      if (s.arrows[f].cod != s.arrows[g].dom) continue;
      s.table[g][f] = amap[c.compose(aback[g], aback[f])];
    }
  s.finalize();
  if (obj_back) *obj_back = oback;
  return s;
}

FinCategory setarrow_fragment(
    const std::vector<std::tuple<int, int, std::vector<int>>>& funcs, int max_set,
    ArrowCategoryInfo* info) {
  // Built directly (not via arrow_category of the full base) so that the base
  // can be larger than what a materialized arrow category would allow.
  FinCategory base = finset_category(max_set);
  std::vector<int> objs;
  for (auto& [dom, cod, img] : funcs) {
    int f = finset_arrow(base, dom, cod, img);
    if (f == FinCategory::kNone) throw std::runtime_error("setarrow_fragment: bad function");
    objs.push_back(f);
  }
  FinCategory frag;
  frag.name = "setarrow-fragment" + std::to_string(max_set);
  ArrowCategoryInfo local;
  ArrowCategoryInfo& ai = info ? *info : local;
  for (int f : objs) {
    ai.obj_arrow.push_back(f);
    frag.objects.push_back("[" + base.arrows[f].name + "]");
  }
  std::map<std::tuple<int, int, int, int>, int> sq_lookup;
  int no = static_cast<int>(objs.size());
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j) {
      int f = objs[i], g = objs[j];
      for (int a : base.hom(base.arrows[f].dom, base.arrows[g].dom))
        for (int b : base.hom(base.arrows[f].cod, base.arrows[g].cod))
          if (base.compose(g, a) == base.compose(b, f)) {
            sq_lookup[{i, j, a, b}] = frag.num_arrows();
            ai.arr_squares.emplace_back(a, b);
            frag.arrows.push_back(
                {"sq(" + base.arrows[a].name + ";" + base.arrows[b].name + ")", i, j});
          }
    }
  frag.identity.assign(no, -1);
  for (int i = 0; i < no; ++i)
    frag.identity[i] = sq_lookup.at(
        {i, i, base.identity[base.arrows[objs[i]].dom], base.identity[base.arrows[objs[i]].cod]});
  frag.table.assign(frag.num_arrows(), std::vector<int>(frag.num_arrows(), FinCategory::kNone));
  for (int p = 0; p < frag.num_arrows(); ++p)
    for (int q = 0; q < frag.num_arrows(); ++q) {
      if (frag.arrows[q].cod != frag.arrows[p].dom) continue;
      auto [a1, b1] = ai.arr_squares[p];
      auto [a2, b2] = ai.arr_squares[q];
      frag.table[p][q] = sq_lookup.at(
          {frag.arrows[q].dom, frag.arrows[p].cod, base.compose(a1, a2), base.compose(b1, b2)});
    }
  frag.finalize();
  return frag;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory o;
  o.name = c.name + "^op";
  o.objects = c.objects;
  for (auto& a : c.arrows) o.arrows.push_back({a.name, a.cod, a.dom});
  o.identity = c.identity;
  o.table.assign(c.num_arrows(), std::vector<int>(c.num_arrows(), FinCategory::kNone));
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f = 0; f < c.num_arrows(); ++f)
      if (c.arrows[f].cod == c.arrows[g].dom) o.table[f][g] = c.table[g][f];
  o.finalize();
  return o;
}

// ---- functors ----

Report validate_functor(const FunctorData& fd) {
  Report rep;
  rep.subject = "functor";
  const FinCategory& c = *fd.src;
  const FinCategory& d = *fd.dst;
  bool ok = true;
  for (int f = 0; f < c.num_arrows(); ++f) {
    int ff = fd.arr_map[f];
    if (d.arrows[ff].dom != fd.obj_map[c.arrows[f].dom] ||
        d.arrows[ff].cod != fd.obj_map[c.arrows[f].cod]) {
      rep.fail("functor-endpoints", c.arrows[f].name);
      ok = false;
    }
  }
  for (int o = 0; o < c.num_objects(); ++o)
    if (fd.arr_map[c.identity[o]] != d.identity[fd.obj_map[o]]) {
      rep.fail("functor-identities", c.objects[o]);
      ok = false;
    }
  for (int g = 0; g < c.num_arrows() && ok; ++g)
    for (int f = 0; f < c.num_arrows(); ++f) {
      if (c.arrows[f].cod != c.arrows[g].dom) continue;
      if (fd.arr_map[c.compose(g, f)] != d.compose(fd.arr_map[g], fd.arr_map[f])) {
        rep.fail("functor-composition", c.arrows[g].name + "∘" + c.arrows[f].name);
        ok = false;
      }
    }
  if (ok) rep.pass("functoriality");
  return rep;
}

bool is_functor(const FunctorData& f) { return validate_functor(f).ok(); }

FunctorData identity_functor(const FinCategory& c) {
  FunctorData f;
  f.src = f.dst = &c;
  f.obj_map.resize(c.num_objects());
  f.arr_map.resize(c.num_arrows());
  for (int i = 0; i < c.num_objects(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c.num_arrows(); ++i) f.arr_map[i] = i;
  return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  FunctorData h;
  h.src = f.src;
  h.dst = g.dst;
  for (int o : f.obj_map) h.obj_map.push_back(g.obj_map[o]);
  for (int a : f.arr_map) h.arr_map.push_back(g.arr_map[a]);
  return h;
}

DiagramData make_diagram(const FinCategory& shape, const FinCategory& target,
                         std::vector<int> obj_map, std::vector<int> arr_map) {
  DiagramData d;
  d.src = &shape;
  d.dst = &target;
  d.obj_map = std::move(obj_map);
  d.arr_map = std::move(arr_map);
  return d;
}

// ---- shapes ----

namespace {
FinCategory from_raw_unchecked(RawCategory raw) {
  auto c = build_category(raw);
  assert(c);
  return *c;
}
}  // namespace

FinCategory shape_empty() {
  RawCategory r;
  r.name = "shape-empty";
  return from_raw_unchecked(r);
}

FinCategory shape_point() { return shape_discrete(1); }

FinCategory shape_discrete(int n) {
  RawCategory r;
  r.name = "shape-discrete" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    std::string o = "d" + std::to_string(i);
    r.objects.push_back(o);
    r.arrows.push_back({"id_" + o, o, o});
    r.identities.emplace_back(o, "id_" + o);
    r.composites.push_back({"id_" + o, "id_" + o, "id_" + o});
  }
  return from_raw_unchecked(r);
}

FinCategory shape_arrow() {
  RawCategory r;
  r.name = "shape-arrow";
  r.objects = {"a", "b"};
  r.arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"e", "a", "b"}};
  r.identities = {{"a", "ida"}, {"b", "idb"}};
  r.composites = {{"ida", "ida", "ida"}, {"idb", "idb", "idb"},
                  {"e", "ida", "e"},     {"idb", "e", "e"}};
  return from_raw_unchecked(r);
}

FinCategory shape_parallel_pair() {
  RawCategory r;
  r.name = "shape-parallel";
  r.objects = {"a", "b"};
  r.arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"e1", "a", "b"}, {"e2", "a", "b"}};
  r.identities = {{"a", "ida"}, {"b", "idb"}};
  r.composites = {{"ida", "ida", "ida"}, {"idb", "idb", "idb"}, {"e1", "ida", "e1"},
                  {"idb", "e1", "e1"},   {"e2", "ida", "e2"},   {"idb", "e2", "e2"}};
  return from_raw_unchecked(r);
}

FinCategory shape_span() {
  RawCategory r;
  r.name = "shape-span";
  r.objects = {"a", "b", "c"};
  r.arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"idc", "c", "c"},
              {"l", "a", "b"},   {"r", "a", "c"}};
  r.identities = {{"a", "ida"}, {"b", "idb"}, {"c", "idc"}};
  r.composites = {{"ida", "ida", "ida"}, {"idb", "idb", "idb"}, {"idc", "idc", "idc"},
                  {"l", "ida", "l"},     {"idb", "l", "l"},     {"r", "ida", "r"},
                  {"idc", "r", "r"}};
  return from_raw_unchecked(r);
}

FinCategory shape_cospan() {
  RawCategory r;
  r.name = "shape-cospan";
  r.objects = {"a", "b", "c"};
  r.arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"idc", "c", "c"},
              {"l", "b", "a"},   {"r", "c", "a"}};
  r.identities = {{"a", "ida"}, {"b", "idb"}, {"c", "idc"}};
  r.composites = {{"ida", "ida", "ida"}, {"idb", "idb", "idb"}, {"idc", "idc", "idc"},
                  {"l", "idb", "l"},     {"ida", "l", "l"},     {"r", "idc", "r"},
                  {"ida", "r", "r"}};
  return from_raw_unchecked(r);
}

}  // namespace fq
