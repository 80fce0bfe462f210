#include "fq/ssetlib.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace fq {

namespace {

constexpr const char* kBuildAnchor = "sset/build";
constexpr const char* kUniqueAnchor = "sset/unique-arrow";
constexpr const char* kDiscAnchor = "sset/discrete";
constexpr const char* kDnAnchor = "sset/dn";

using Tso = TruncatedSimplicialObject;

std::string cell_id(int m, int idx) {
  return "level " + std::to_string(m) + " cell " + std::to_string(idx);
}

}  // namespace

Report validate_simplicial(const Tso& x) {
  Report rep;
  rep.subject = "simplicial-identities";
  auto shape_fail = [&](const std::string& w) {
    rep.fail("levels-and-maps-well-formed", w, kBuildAnchor);
  };
  if (static_cast<int>(x.level.size()) != x.d + 1 ||
      static_cast<int>(x.face.size()) != x.d + 1 ||
      static_cast<int>(x.degen.size()) != x.d + 1) {
    shape_fail("table sizes");
    return rep;
  }
  for (int m = 1; m <= x.d; ++m) {
    if (static_cast<int>(x.face[m].size()) != m + 1) {
      shape_fail("face count at level " + std::to_string(m));
      return rep;
    }
    for (int i = 0; i <= m; ++i) {
      if (static_cast<int>(x.face[m][i].size()) != x.level[m]) {
        shape_fail("face table at level " + std::to_string(m));
        return rep;
      }
      for (int v : x.face[m][i])
        if (v < 0 || v >= x.level[m - 1]) {
          shape_fail("face range at level " + std::to_string(m));
          return rep;
        }
    }
  }
  for (int m = 0; m < x.d; ++m) {
    if (static_cast<int>(x.degen[m].size()) != m + 1) {
      shape_fail("degeneracy count at level " + std::to_string(m));
      return rep;
    }
    for (int j = 0; j <= m; ++j) {
      if (static_cast<int>(x.degen[m][j].size()) != x.level[m]) {
        shape_fail("degeneracy table at level " + std::to_string(m));
        return rep;
      }
      for (int v : x.degen[m][j])
        if (v < 0 || v >= x.level[m + 1]) {
          shape_fail("degeneracy range at level " + std::to_string(m));
          return rep;
        }
    }
  }
  rep.pass("levels-and-maps-well-formed", kBuildAnchor);

  bool ok = true;
  std::string w;
  for (int m = 2; m <= x.d && ok; ++m)
    for (int j = 1; j <= m && ok; ++j)
      for (int i = 0; i < j && ok; ++i)
        for (int c = 0; c < x.level[m]; ++c)
          if (x.face[m - 1][i][x.face[m][j][c]] != x.face[m - 1][j - 1][x.face[m][i][c]]) {
            ok = false;
            w = cell_id(m, c) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
            break;
          }
  rep.add("face-face", ok, w, kBuildAnchor);

  ok = true;
  w.clear();
  for (int m = 0; m + 2 <= x.d && ok; ++m)
    for (int j = 0; j <= m && ok; ++j)
      for (int i = 0; i <= j && ok; ++i)
        for (int c = 0; c < x.level[m]; ++c)
          if (x.degen[m + 1][i][x.degen[m][j][c]] != x.degen[m + 1][j + 1][x.degen[m][i][c]]) {
            ok = false;
            w = cell_id(m, c) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
            break;
          }
  rep.add("degeneracy-degeneracy", ok, w, kBuildAnchor);

  ok = true;
  w.clear();
  for (int m = 0; m < x.d && ok; ++m)
    for (int j = 0; j <= m && ok; ++j)
      for (int i = 0; i <= m + 1 && ok; ++i)
        for (int c = 0; c < x.level[m]; ++c) {
          int lhs = x.face[m + 1][i][x.degen[m][j][c]];
          int rhs;
          if (i < j)
            rhs = x.degen[m - 1][j - 1][x.face[m][i][c]];
          else if (i == j || i == j + 1)
            rhs = c;
          else
            rhs = x.degen[m - 1][j][x.face[m][i - 1][c]];
          if (lhs != rhs) {
            ok = false;
            w = cell_id(m, c) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
            break;
          }
        }
  rep.add("face-degeneracy", ok, w, kBuildAnchor);
  return rep;
}

namespace {

/// Nondecreasing tuples of the given length over 0..top.
std::vector<std::vector<int>> monotone_tuples(int len, int top) {
  std::vector<std::vector<int>> out;
  if (top < 0 || len <= 0) return out;
  std::vector<int> cur(len, 0);
  while (true) {
    out.push_back(cur);
    int p = len - 1;
    while (p >= 0 && cur[p] == top) --p;
    if (p < 0) break;
    ++cur[p];
    for (int q = p + 1; q < len; ++q) cur[q] = cur[p];
  }
  return out;
}

bool tuple_surjective(const std::vector<int>& t, int top) {
  int seen = 0;
  for (int v : t)
    if (v == seen) ++seen;
  return seen == top + 1;
}

/// Surjective nondecreasing tuples of the given length onto 0..top, built by
/// choosing the positions of the value increases (avoids enumerating the full
/// tuple space, which is large when top is).
std::vector<std::vector<int>> surjective_tuples(int len, int top) {
  std::vector<std::vector<int>> out;
  int gaps = len - 1;
  if (top < 0 || top > gaps) return out;
  std::vector<int> pick(top);
  for (int i = 0; i < top; ++i) pick[i] = i;
  while (true) {
    std::vector<int> t(len);
    int v = 0, next = 0;
    for (int pos = 0; pos < len; ++pos) {
      t[pos] = v;
      if (next < top && pick[next] == pos) {
        ++v;
        ++next;
      }
    }
    out.push_back(t);
    int p = top - 1;
    while (p >= 0 && pick[p] == gaps - (top - p)) --p;
    if (p < 0) break;
    ++pick[p];
    for (int q = p + 1; q < top; ++q) pick[q] = pick[q - 1] + 1;
    if (top == 0) break;
  }
  if (top == 0 && out.empty()) out.push_back(std::vector<int>(len, 0));
  return out;
}

std::vector<int> tuple_erase(const std::vector<int>& t, int i) {
  std::vector<int> r = t;
  r.erase(r.begin() + i);
  return r;
}

std::vector<int> tuple_duplicate(const std::vector<int>& t, int j) {
  std::vector<int> r = t;
  r.insert(r.begin() + j, t[j]);
  return r;
}

/// Build a truncated object from explicit cell tuples per level, where faces
/// erase a position and degeneracies duplicate one.
Tso from_tuples(int d, const std::vector<std::vector<std::vector<int>>>& cells) {
  Tso x;
  x.d = d;
  x.level.resize(d + 1);
  x.face.resize(d + 1);
  x.degen.resize(d + 1);
  std::vector<std::map<std::vector<int>, int>> index(d + 1);
  for (int m = 0; m <= d; ++m) {
    x.level[m] = static_cast<int>(cells[m].size());
    for (int i = 0; i < x.level[m]; ++i) index[m][cells[m][i]] = i;
  }
  for (int m = 1; m <= d; ++m) {
    x.face[m].assign(m + 1, std::vector<int>(x.level[m]));
    for (int i = 0; i <= m; ++i)
      for (int c = 0; c < x.level[m]; ++c)
        x.face[m][i][c] = index[m - 1].at(tuple_erase(cells[m][c], i));
  }
  for (int m = 0; m < d; ++m) {
    x.degen[m].assign(m + 1, std::vector<int>(x.level[m]));
    for (int j = 0; j <= m; ++j)
      for (int c = 0; c < x.level[m]; ++c)
        x.degen[m][j][c] = index[m + 1].at(tuple_duplicate(cells[m][c], j));
  }
  return x;
}

}  // namespace

Tso sset_simplex(int n, int d) {
  std::vector<std::vector<std::vector<int>>> cells(d + 1);
  for (int m = 0; m <= d; ++m) cells[m] = monotone_tuples(m + 1, n);
  return from_tuples(d, cells);
}

Tso sset_boundary(int n, int d) {
  std::vector<std::vector<std::vector<int>>> cells(d + 1);
  for (int m = 0; m <= d; ++m)
    for (auto& t : monotone_tuples(m + 1, n))
      if (!tuple_surjective(t, n)) cells[m].push_back(t);
  return from_tuples(d, cells);
}

Tso sset_sphere(int n, int d) {
  if (n == 0) return sset_simplex(0, d);
  Tso x;
  x.d = d;
  x.level.resize(d + 1);
  x.face.resize(d + 1);
  x.degen.resize(d + 1);
  // cell 0 at each level is the collapsed point; the rest are the surjective
  // simplices of the n-simplex
  std::vector<std::vector<std::vector<int>>> cells(d + 1);
  std::vector<std::map<std::vector<int>, int>> index(d + 1);
  for (int m = 0; m <= d; ++m) {
    cells[m] = surjective_tuples(m + 1, n);
    for (int i = 0; i < static_cast<int>(cells[m].size()); ++i) index[m][cells[m][i]] = i + 1;
    x.level[m] = 1 + static_cast<int>(cells[m].size());
  }
  for (int m = 1; m <= d; ++m) {
    x.face[m].assign(m + 1, std::vector<int>(x.level[m], 0));
    for (int i = 0; i <= m; ++i)
      for (int c = 0; c < static_cast<int>(cells[m].size()); ++c) {
        auto f = tuple_erase(cells[m][c], i);
        auto it = index[m - 1].find(f);
        x.face[m][i][c + 1] = it == index[m - 1].end() ? 0 : it->second;
      }
  }
  for (int m = 0; m < d; ++m) {
    x.degen[m].assign(m + 1, std::vector<int>(x.level[m], 0));
    for (int j = 0; j <= m; ++j)
      for (int c = 0; c < static_cast<int>(cells[m].size()); ++c)
        x.degen[m][j][c + 1] = index[m + 1].at(tuple_duplicate(cells[m][c], j));
  }
  return x;
}

Tso sset_constant(int size, int d) {
  Tso x;
  x.d = d;
  x.level.assign(d + 1, size);
  x.face.resize(d + 1);
  x.degen.resize(d + 1);
  std::vector<int> id(size);
  for (int i = 0; i < size; ++i) id[i] = i;
  for (int m = 1; m <= d; ++m) x.face[m].assign(m + 1, id);
  for (int m = 0; m < d; ++m) x.degen[m].assign(m + 1, id);
  return x;
}

Tso sset_build(const std::string& name, long param, int d) {
  int p = static_cast<int>(std::max(0L, param));
  if (name == "simplex") return sset_simplex(p, d);
  if (name == "boundary") return sset_boundary(p, d);
  if (name == "sphere") return sset_sphere(p, d);
  if (name == "constant") return sset_constant(p, d);
  return sset_empty(d);
}

Tso sset_terminal(int d) { return sset_constant(1, d); }
Tso sset_empty(int d) { return sset_constant(0, d); }

Tso sset_product(const Tso& a, const Tso& b) {
  Tso p;
  p.d = a.d;
  p.level.resize(p.d + 1);
  p.face.resize(p.d + 1);
  p.degen.resize(p.d + 1);
  for (int m = 0; m <= p.d; ++m) p.level[m] = a.level[m] * b.level[m];
  for (int m = 1; m <= p.d; ++m) {
    p.face[m].assign(m + 1, std::vector<int>(p.level[m]));
    for (int i = 0; i <= m; ++i)
      for (int c = 0; c < p.level[m]; ++c) {
        int ca = c / b.level[m], cb = c % b.level[m];
        p.face[m][i][c] = a.face[m][i][ca] * b.level[m - 1] + b.face[m][i][cb];
      }
  }
  for (int m = 0; m < p.d; ++m) {
    p.degen[m].assign(m + 1, std::vector<int>(p.level[m]));
    for (int j = 0; j <= m; ++j)
      for (int c = 0; c < p.level[m]; ++c) {
        int ca = c / b.level[m], cb = c % b.level[m];
        p.degen[m][j][c] = a.degen[m][j][ca] * b.level[m + 1] + b.degen[m][j][cb];
      }
  }
  return p;
}

Tso sset_coproduct(const Tso& a, const Tso& b) {
  Tso s;
  s.d = a.d;
  s.level.resize(s.d + 1);
  s.face.resize(s.d + 1);
  s.degen.resize(s.d + 1);
  for (int m = 0; m <= s.d; ++m) s.level[m] = a.level[m] + b.level[m];
  for (int m = 1; m <= s.d; ++m) {
    s.face[m].assign(m + 1, std::vector<int>(s.level[m]));
    for (int i = 0; i <= m; ++i) {
      for (int c = 0; c < a.level[m]; ++c) s.face[m][i][c] = a.face[m][i][c];
      for (int c = 0; c < b.level[m]; ++c)
        s.face[m][i][a.level[m] + c] = a.level[m - 1] + b.face[m][i][c];
    }
  }
  for (int m = 0; m < s.d; ++m) {
    s.degen[m].assign(m + 1, std::vector<int>(s.level[m]));
    for (int j = 0; j <= m; ++j) {
      for (int c = 0; c < a.level[m]; ++c) s.degen[m][j][c] = a.degen[m][j][c];
      for (int c = 0; c < b.level[m]; ++c)
        s.degen[m][j][a.level[m] + c] = a.level[m + 1] + b.degen[m][j][c];
    }
  }
  return s;
}

Tso tau_minus_one(const Tso& x) { return x.empty() ? sset_empty(x.d) : sset_terminal(x.d); }

Tso sset_collapse(const Tso& x, const std::vector<std::vector<bool>>& sub) {
  Tso q;
  q.d = x.d;
  q.level.resize(q.d + 1);
  q.face.resize(q.d + 1);
  q.degen.resize(q.d + 1);
  std::vector<std::vector<int>> remap(q.d + 1);
  for (int m = 0; m <= q.d; ++m) {
    remap[m].assign(x.level[m], 0);
    int next = 1;
    for (int c = 0; c < x.level[m]; ++c)
      if (!sub[m][c]) remap[m][c] = next++;
    q.level[m] = next;
  }
  for (int m = 1; m <= q.d; ++m) {
    q.face[m].assign(m + 1, std::vector<int>(q.level[m], 0));
    for (int i = 0; i <= m; ++i)
      for (int c = 0; c < x.level[m]; ++c)
        if (!sub[m][c]) q.face[m][i][remap[m][c]] = remap[m - 1][x.face[m][i][c]];
  }
  for (int m = 0; m < q.d; ++m) {
    q.degen[m].assign(m + 1, std::vector<int>(q.level[m], 0));
    for (int j = 0; j <= m; ++j)
      for (int c = 0; c < x.level[m]; ++c)
        if (!sub[m][c]) q.degen[m][j][remap[m][c]] = remap[m + 1][x.degen[m][j][c]];
  }
  return q;
}

Tso sset_sphere_by_quotient(int n, int d) {
  std::vector<std::vector<std::vector<int>>> cells(d + 1);
  for (int m = 0; m <= d; ++m) cells[m] = monotone_tuples(m + 1, n);
  Tso simplex = from_tuples(d, cells);
  std::vector<std::vector<bool>> sub(d + 1);
  for (int m = 0; m <= d; ++m) {
    sub[m].resize(cells[m].size());
    for (int c = 0; c < static_cast<int>(cells[m].size()); ++c)
      sub[m][c] = !tuple_surjective(cells[m][c], n);
  }
  return sset_collapse(simplex, sub);
}

namespace {

struct CellStructure {
  std::vector<std::vector<bool>> degenerate;         // [m][idx]
  std::vector<std::vector<std::pair<int, int>>> pre; // [m][idx] -> (j, source)
};

CellStructure cell_structure(const Tso& x) {
  CellStructure cs;
  cs.degenerate.resize(x.d + 1);
  cs.pre.resize(x.d + 1);
  for (int m = 0; m <= x.d; ++m) {
    cs.degenerate[m].assign(x.level[m], false);
    cs.pre[m].assign(x.level[m], {-1, -1});
  }
  for (int m = 0; m < x.d; ++m)
    for (int j = 0; j <= m; ++j)
      for (int src = 0; src < x.level[m]; ++src) {
        int tgt = x.degen[m][j][src];
        if (!cs.degenerate[m + 1][tgt]) {
          cs.degenerate[m + 1][tgt] = true;
          cs.pre[m + 1][tgt] = {j, src};
        }
      }
  return cs;
}

std::pair<int, int> cell_core(const CellStructure& cs, int m, int idx) {
  while (m > 0 && cs.degenerate[m][idx]) {
    idx = cs.pre[m][idx].second;
    --m;
  }
  return {m, idx};
}

}  // namespace

bool sset_discrete(const Tso& x) {
  auto cs = cell_structure(x);
  for (int m = 1; m <= x.d; ++m)
    for (int c = 0; c < x.level[m]; ++c)
      if (!cs.degenerate[m][c]) return false;
  return true;
}

std::vector<SimplicialMap> hom_set(const Tso& x, const Tso& y) {
  std::vector<SimplicialMap> out;
  if (x.d != y.d) return out;
  auto cs = cell_structure(x);
  std::vector<std::vector<int>> nd(x.d + 1);
  for (int m = 0; m <= x.d; ++m)
    for (int c = 0; c < x.level[m]; ++c)
      if (!cs.degenerate[m][c]) nd[m].push_back(c);
  SimplicialMap f(x.d + 1);
  for (int m = 0; m <= x.d; ++m) f[m].assign(x.level[m], -1);

  std::function<void(int, int)> rec = [&](int m, int k) {
    if (m > x.d) {
      out.push_back(f);
      return;
    }
    if (k == static_cast<int>(nd[m].size())) {
      std::vector<int> filled;
      bool ok = true;
      if (m >= 1) {
        // extend to the degeneracy images; clashes between two degeneracy
        // presentations of the same cell are genuine naturality failures
        for (int j = 0; j < m && ok; ++j)
          for (int src = 0; src < x.level[m - 1] && ok; ++src) {
            int tgt = x.degen[m - 1][j][src];
            int val = y.degen[m - 1][j][f[m - 1][src]];
            if (f[m][tgt] == -1) {
              f[m][tgt] = val;
              filled.push_back(tgt);
            } else if (f[m][tgt] != val) {
              ok = false;
            }
          }
        for (int c = 0; c < x.level[m] && ok; ++c) {
          if (!cs.degenerate[m][c]) continue;
          for (int i = 0; i <= m && ok; ++i)
            ok = y.face[m][i][f[m][c]] == f[m - 1][x.face[m][i][c]];
        }
      }
      if (ok) rec(m + 1, 0);
      for (int t : filled) f[m][t] = -1;
      return;
    }
    int c = nd[m][k];
    for (int cand = 0; cand < y.level[m]; ++cand) {
      bool good = true;
      if (m >= 1)
        for (int i = 0; i <= m && good; ++i)
          good = y.face[m][i][cand] == f[m - 1][x.face[m][i][c]];
      if (!good) continue;
      f[m][c] = cand;
      rec(m, k + 1);
      f[m][c] = -1;
    }
  };
  rec(0, 0);
  return out;
}

bool sset_iso(const Tso& x, const Tso& y) {
  if (x.d != y.d || x.level != y.level) return false;
  for (auto& f : hom_set(x, y)) {
    bool bij = true;
    for (int m = 0; m <= x.d && bij; ++m) {
      std::vector<bool> hit(y.level[m], false);
      for (int v : f[m]) {
        if (hit[v]) {
          bij = false;
          break;
        }
        hit[v] = true;
      }
    }
    if (bij) return true;
  }
  return x.level[0] == 0;  // two empty objects have no maps but are isomorphic
}

std::vector<std::vector<std::vector<bool>>> subcomplexes(const Tso& x) {
  std::vector<std::vector<std::vector<bool>>> out;
  auto cs = cell_structure(x);
  std::vector<std::pair<int, int>> nd;
  for (int m = 0; m <= x.d; ++m)
    for (int c = 0; c < x.level[m]; ++c)
      if (!cs.degenerate[m][c]) nd.push_back({m, c});
  int n = static_cast<int>(nd.size());
  if (n > 20) return out;
  std::map<std::pair<int, int>, int> bit;
  for (int i = 0; i < n; ++i) bit[nd[i]] = i;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [m, c] = nd[i];
      for (int fi = 0; fi <= m && closed && m >= 1; ++fi) {
        auto core = cell_core(cs, m - 1, x.face[m][fi][c]);
        closed = mask >> bit.at(core) & 1;
      }
    }
    if (!closed) continue;
    std::vector<std::vector<bool>> sub(x.d + 1);
    for (int m = 0; m <= x.d; ++m) {
      sub[m].assign(x.level[m], false);
      for (int c = 0; c < x.level[m]; ++c) {
        auto core = cell_core(cs, m, c);
        sub[m][c] = mask >> bit.at(core) & 1;
      }
    }
    out.push_back(std::move(sub));
  }
  return out;
}

// ---- contexts ----

std::vector<FamilyObject> context_subterminals(const SsetContext& ctx) {
  std::vector<FamilyObject> out;
  for (unsigned mask = 0; mask < (1u << ctx.copies); ++mask) {
    FamilyObject u;
    for (int i = 0; i < ctx.copies; ++i)
      u.push_back(mask >> i & 1 ? sset_terminal(ctx.d) : sset_empty(ctx.d));
    out.push_back(std::move(u));
  }
  return out;
}

bool germ_initial(const SsetContext& ctx, const FamilyObject& u) {
  for (int i : ctx.support)
    if (!u[i].empty()) return false;
  return true;
}

FamilyObject interval_object(const SsetContext& ctx, const FamilyObject& u) {
  FamilyObject a;
  for (int i = 0; i < ctx.copies; ++i) a.push_back(sset_product(sset_simplex(1, ctx.d), u[i]));
  return a;
}

bool family_iso(const SsetContext& ctx, const FamilyObject& a, const FamilyObject& b) {
  for (int i : ctx.support)
    if (!sset_iso(a[i], b[i])) return false;
  return true;
}

namespace {

std::vector<std::vector<bool>> map_image(const Tso& src, const Tso& dst, const SimplicialMap& f) {
  std::vector<std::vector<bool>> im(dst.d + 1);
  for (int m = 0; m <= dst.d; ++m) {
    im[m].assign(dst.level[m], false);
    for (int c = 0; c < src.level[m]; ++c) im[m][f[m][c]] = true;
  }
  return im;
}

std::vector<std::vector<bool>> mask_union(const std::vector<std::vector<bool>>& a,
                                          const std::vector<std::vector<bool>>& b) {
  auto r = a;
  for (size_t m = 0; m < r.size(); ++m)
    for (size_t c = 0; c < r[m].size(); ++c) r[m][c] = r[m][c] || b[m][c];
  return r;
}

bool mask_leq(const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b) {
  for (size_t m = 0; m < a.size(); ++m)
    for (size_t c = 0; c < a[m].size(); ++c)
      if (a[m][c] && !b[m][c]) return false;
  return true;
}

bool mask_full(const std::vector<std::vector<bool>>& a) {
  for (auto& lv : a)
    for (bool v : lv)
      if (!v) return false;
  return true;
}

bool mask_empty_all(const std::vector<std::vector<bool>>& a) {
  for (auto& lv : a)
    for (bool v : lv)
      if (v) return false;
  return true;
}

}  // namespace

Report unique_arrow_check(const SsetContext& ctx, const FamilyObject& u, const FamilyObject& a) {
  Report rep;
  rep.subject = "unique-arrow";
  // levels are plain finite sets by representation, which is the truncated
  // shadow of discreteness of the external levels
  rep.pass("zero-truncated", kUniqueAnchor);

  bool tr = true;
  std::string w;
  for (int i : ctx.support)
    if (a[i].empty() != u[i].empty()) {
      tr = false;
      w = "component " + std::to_string(i);
      break;
    }
  rep.add("minus-one-truncation-is-u", tr, w, kUniqueAnchor);

  std::vector<std::vector<SimplicialMap>> homs;
  long total = 1;
  for (int i : ctx.support) {
    homs.push_back(hom_set(u[i], a[i]));
    total *= static_cast<long>(homs.back().size());
  }
  rep.add("two-maps-from-u", total == 2, "germ hom size " + std::to_string(total), kUniqueAnchor);
  if (total != 2 || !tr) {
    for (const char* name :
         {"endpoints-not-iso", "subobjects-within-endpoints", "no-intermediate-factorization"})
      rep.items.push_back(
          {name, Status::Undecidable, "requires exactly two maps from u", kUniqueAnchor});
    return rep;
  }

  int sup = static_cast<int>(ctx.support.size());
  // exactly one support component carries two maps; the rest carry one
  std::vector<int> e0(sup, 0), e1(sup, 0);
  for (int k = 0; k < sup; ++k)
    if (homs[k].size() == 2) e1[k] = 1;

  // endpoints map: u + u -> a, first copy along e0, second along e1
  bool iso_everywhere = true;
  for (int k = 0; k < sup; ++k) {
    int i = ctx.support[k];
    const Tso& ui = u[i];
    const Tso& ai = a[i];
    const SimplicialMap& f0 = homs[k][e0[k]];
    const SimplicialMap& f1 = homs[k][e1[k]];
    for (int m = 0; m <= ctx.d && iso_everywhere; ++m) {
      std::vector<bool> hit(ai.level[m], false);
      if (2 * ui.level[m] != ai.level[m]) {
        iso_everywhere = false;
        break;
      }
      for (int c = 0; c < ui.level[m]; ++c) {
        for (int v : {f0[m][c], f1[m][c]}) {
          if (hit[v]) {
            iso_everywhere = false;
            break;
          }
          hit[v] = true;
        }
        if (!iso_everywhere) break;
      }
    }
  }
  rep.add("endpoints-not-iso", !iso_everywhere, "u + u -> a is an isomorphism", kUniqueAnchor);

  // germ subobjects are support-componentwise subcomplex tuples
  std::vector<std::vector<std::vector<std::vector<bool>>>> subs;
  std::vector<std::vector<std::vector<bool>>> images;
  for (int k = 0; k < sup; ++k) {
    int i = ctx.support[k];
    subs.push_back(subcomplexes(a[i]));
    images.push_back(mask_union(map_image(u[i], a[i], homs[k][e0[k]]),
                                map_image(u[i], a[i], homs[k][e1[k]])));
  }

  bool bounded = true, no_mid = true;
  std::string wb, wm;
  std::vector<int> pick(sup, 0);
  while (true) {
    bool germ_empty = true, germ_full = true, above_im = true, at_im = true;
    for (int k = 0; k < sup; ++k) {
      const auto& s = subs[k][pick[k]];
      if (!mask_empty_all(s)) germ_empty = false;
      if (!mask_full(s)) germ_full = false;
      if (!mask_leq(images[k], s)) above_im = false;
      if (s != images[k]) at_im = false;
    }
    if (!germ_empty && !germ_full) {
      bool within = true;
      for (int k = 0; k < sup && within; ++k) within = mask_leq(subs[k][pick[k]], images[k]);
      if (!within && bounded) {
        bounded = false;
        wb = "subobject outside the endpoints";
      }
    }
    if (above_im && !at_im && !germ_full && no_mid) {
      no_mid = false;
      wm = "subobject strictly between the endpoints and a";
    }
    int k = sup - 1;
    while (k >= 0 && pick[k] + 1 == static_cast<int>(subs[k].size())) pick[k--] = 0;
    if (k < 0) break;
    ++pick[k];
  }
  rep.add("subobjects-within-endpoints", bounded, wb, kUniqueAnchor);
  rep.add("no-intermediate-factorization", no_mid, wm, kUniqueAnchor);
  return rep;
}

namespace {

/// Candidate truncation-2 objects presented by nondegenerate cells: vertices,
/// edges with chosen endpoints, triangles with chosen edge faces.
struct CellPresentation {
  int verts = 0;
  std::vector<std::pair<int, int>> edges;   // (d0, d1) vertices
  std::vector<std::array<int, 3>> tris;     // level-1 indices of (d0, d1, d2)
};

Tso from_cells(const CellPresentation& p) {
  Tso x;
  x.d = 2;
  int e = static_cast<int>(p.edges.size());
  int t = static_cast<int>(p.tris.size());
  x.level = {p.verts, e + p.verts, t + 2 * e + p.verts};
  x.face.resize(3);
  x.degen.resize(3);

  x.face[1].assign(2, std::vector<int>(x.level[1]));
  for (int g = 0; g < e; ++g) {
    x.face[1][0][g] = p.edges[g].first;
    x.face[1][1][g] = p.edges[g].second;
  }
  for (int v = 0; v < p.verts; ++v) x.face[1][0][e + v] = x.face[1][1][e + v] = v;

  x.degen[0].assign(1, std::vector<int>(p.verts));
  for (int v = 0; v < p.verts; ++v) x.degen[0][0][v] = e + v;

  x.degen[1].assign(2, std::vector<int>(x.level[1]));
  for (int g = 0; g < e; ++g) {
    x.degen[1][0][g] = t + 2 * g;
    x.degen[1][1][g] = t + 2 * g + 1;
  }
  for (int v = 0; v < p.verts; ++v)
    x.degen[1][0][e + v] = x.degen[1][1][e + v] = t + 2 * e + v;

  x.face[2].assign(3, std::vector<int>(x.level[2]));
  for (int i = 0; i < t; ++i)
    for (int f = 0; f < 3; ++f) x.face[2][f][i] = p.tris[i][f];
  for (int g = 0; g < e; ++g) {
    x.face[2][0][t + 2 * g] = g;
    x.face[2][1][t + 2 * g] = g;
    x.face[2][2][t + 2 * g] = e + p.edges[g].second;
    x.face[2][0][t + 2 * g + 1] = e + p.edges[g].first;
    x.face[2][1][t + 2 * g + 1] = g;
    x.face[2][2][t + 2 * g + 1] = g;
  }
  for (int v = 0; v < p.verts; ++v)
    for (int f = 0; f < 3; ++f) x.face[2][f][t + 2 * e + v] = e + v;
  return x;
}

/// Nondecreasing index sequences of the given size over the given type count.
void multisets(int types, int size, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == size) {
    fn(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v < types; ++v) {
    cur.push_back(v);
    multisets(types, size, cur, fn);
    cur.pop_back();
  }
}

void enumerate_candidates(int max_cells, const std::function<void(const CellPresentation&)>& fn) {
  for (int k = 1; k <= max_cells; ++k) {
    for (int e = 0; e + k <= max_cells; ++e) {
      std::vector<int> cur;
      multisets(k * k, e, cur, [&](const std::vector<int>& etypes) {
        CellPresentation p;
        p.verts = k;
        for (int ty : etypes) p.edges.push_back({ty / k, ty % k});
        // edge universe at level 1: nondegenerate edges then vertex degeneracies
        auto d0 = [&](int g) { return g < e ? p.edges[g].first : g - e; };
        auto d1 = [&](int g) { return g < e ? p.edges[g].second : g - e; };
        std::vector<std::array<int, 3>> ttypes;
        int univ = e + k;
        for (int g0 = 0; g0 < univ; ++g0)
          for (int g1 = 0; g1 < univ; ++g1)
            for (int g2 = 0; g2 < univ; ++g2)
              if (d0(g0) == d0(g1) && d1(g0) == d0(g2) && d1(g1) == d1(g2))
                ttypes.push_back({g0, g1, g2});
        for (int t = 0; t + e + k <= max_cells; ++t) {
          std::vector<int> tc;
          multisets(static_cast<int>(ttypes.size()), t, tc, [&](const std::vector<int>& pickt) {
            CellPresentation q = p;
            for (int ty : pickt) q.tris.push_back(ttypes[ty]);
            fn(q);
          });
        }
      });
    }
  }
}

}  // namespace

UniqueArrowSearch unique_arrow_search(const SsetContext& ctx, const FamilyObject& u,
                                      int max_cells) {
  UniqueArrowSearch res;
  res.report.subject = "unique-arrow-search";
  int comp = -1;
  bool supported = ctx.d == 2;
  for (int i : ctx.support) {
    if (u[i].empty()) continue;
    if (comp >= 0) supported = false;
    comp = i;
  }
  if (comp < 0) supported = false;
  if (!supported) {
    res.report.items.push_back({"search-context-supported", Status::Undecidable,
                                "needs truncation 2 and one nonempty support component",
                                kUniqueAnchor});
    return res;
  }

  FamilyObject delta = interval_object(ctx, u);
  FamilyObject a(ctx.copies, sset_empty(ctx.d));
  bool malformed = false;
  enumerate_candidates(max_cells, [&](const CellPresentation& p) {
    ++res.examined;
    a[comp] = from_cells(p);
    if (!malformed && !validate_simplicial(a[comp]).ok()) {
      malformed = true;
      res.report.fail("candidates-well-formed", "candidate " + std::to_string(res.examined),
                      kUniqueAnchor);
    }
    auto rep = unique_arrow_check(ctx, u, a);
    bool all_pass = true;
    for (auto& it : rep.items) all_pass = all_pass && it.status == Status::Pass;
    if (!all_pass) return;
    ++res.passing;
    if (!family_iso(ctx, a, delta)) {
      ++res.alternatives;
      res.report.fail("no-nonisomorphic-alternative",
                      "candidate with " + std::to_string(p.verts) + " vertices, " +
                          std::to_string(p.edges.size()) + " edges, " +
                          std::to_string(p.tris.size()) + " triangles",
                      kUniqueAnchor);
    }
  });
  if (res.alternatives == 0)
    res.report.pass("no-nonisomorphic-alternative (examined " + std::to_string(res.examined) +
                        ", passing " + std::to_string(res.passing) + ")",
                    kUniqueAnchor);
  return res;
}

// ---- external discreteness ----

bool is_externally_discrete(const Tso& x, Report* out) {
  Report rep;
  rep.subject = "externally-discrete";
  Tso t = tau_minus_one(x);
  long base = static_cast<long>(hom_set(t, x).size());
  bool by_simplex = true, by_cube = true;
  std::string ws, wc;
  Tso cube = sset_terminal(x.d);
  for (int n = 1; n <= x.d; ++n) {
    long c = static_cast<long>(hom_set(sset_product(sset_simplex(n, x.d), t), x).size());
    if (by_simplex && c != base) {
      by_simplex = false;
      ws = "n=" + std::to_string(n) + ": " + std::to_string(c) + " vs " + std::to_string(base);
    }
    cube = sset_product(cube, sset_simplex(1, x.d));
    long c2 = static_cast<long>(hom_set(sset_product(cube, t), x).size());
    if (by_cube && c2 != base) {
      by_cube = false;
      wc = "n=" + std::to_string(n) + ": " + std::to_string(c2) + " vs " + std::to_string(base);
    }
  }
  // locality itself is a verdict, not a check; only disagreement between the
  // two criteria is a failure
  rep.pass("representable-locality: " + std::string(by_simplex ? "local" : "not local " + ws),
           kDiscAnchor);
  rep.pass("cube-locality: " + std::string(by_cube ? "local" : "not local " + wc), kDiscAnchor);
  rep.add("criteria-agree", by_simplex == by_cube, "locality criteria disagree", kDiscAnchor);
  if (out) out->merge(rep);
  return by_simplex;
}

// ---- symbolic families ----

bool known_family_ctor(const std::string& ctor) {
  return ctor == "constant" || ctor == "simplex" || ctor == "boundary" || ctor == "sphere";
}

Tso family_value(const SymbolicFamily& f, long n, int d) {
  return sset_build(f.seq.ctor, eval_sequence(f.seq, n), d);
}

namespace {

/// Discreteness of a builder value at truncation d, as a function of the
/// numeric parameter.
bool builder_discrete(const std::string& ctor, long p, int d) {
  if (p < 0) p = 0;
  if (ctor == "constant" || d == 0) return true;
  if (ctor == "simplex") return p == 0;
  if (ctor == "boundary") return p <= 1;
  if (ctor == "sphere") return p == 0 || p > d;
  return true;
}

/// Discreteness of the untruncated builder value.
bool builder_discrete_untruncated(const std::string& ctor, long p) {
  if (p < 0) p = 0;
  if (ctor == "constant") return true;
  if (ctor == "simplex" || ctor == "sphere") return p == 0;
  return p <= 1;  // boundary
}

}  // namespace

Decision frechet_externally_discrete(const SymbolicFamily& f, int d) {
  if (!known_family_ctor(f.seq.ctor)) return Decision::Undecidable;
  using T = EventualSequence::Tail;
  bool tail_discrete = false;
  switch (f.seq.tail) {
    case T::Constant:
      tail_discrete = builder_discrete(f.seq.ctor, f.seq.value, d);
      break;
    case T::Identity:
    case T::FloorHalf:
      // the parameter grows without bound, and discreteness is constant past
      // every case split (thresholds 0, 1 and d)
      tail_discrete = builder_discrete(f.seq.ctor, static_cast<long>(d) + 2, d);
      break;
    case T::Parity:
      tail_discrete = builder_discrete(f.seq.ctor, f.seq.offset, d) &&
                      builder_discrete(f.seq.ctor, f.seq.offset + 1, d);
      break;
  }
  return tail_discrete ? Decision::Yes : Decision::No;
}

// ---- the divergence window ----

namespace {

bool factors_through_point(const Tso& src, const Tso& dst, const SimplicialMap& f) {
  for (int v = 0; v < dst.level[0]; ++v) {
    int cur = v;
    bool match = true;
    for (int m = 0; m <= dst.d && match; ++m) {
      for (int c = 0; c < src.level[m] && match; ++c) match = f[m][c] == cur;
      if (m < dst.d) cur = dst.degen[m][0][cur];
    }
    if (match) return true;
  }
  return src.empty();
}

}  // namespace

DnResult dn_sequence(const SymbolicFamily& f, int window, long bound) {
  DnResult res;
  res.report.subject = "dn-window";
  if (!known_family_ctor(f.seq.ctor)) {
    res.report.items.push_back(
        {"family-supported", Status::Undecidable, "unknown builder " + f.seq.ctor, kDnAnchor});
    return res;
  }
  for (long n = 0; n <= window; ++n) {
    long p = std::max(0L, eval_sequence(f.seq, n));
    long dn = -1;
    if (builder_discrete_untruncated(f.seq.ctor, p)) {
      dn = n;
    } else {
      // first level where the iterated degeneracy from level 0 stops being
      // onto; the supported builders grow at level 1 or exactly at level p,
      // so probing those truncations keeps the builds small
      for (int t : {1, 2, static_cast<int>(p)}) {
        if (t < 1 || dn >= 0) continue;
        Tso r = sset_build(f.seq.ctor, p, t);
        for (int m = 1; m <= t; ++m)
          if (r.level[m] != r.level[0]) {
            dn = m - 1;
            break;
          }
      }
      if (dn < 0) {
        res.report.fail("level-growth n=" + std::to_string(n),
                        "no growing level within the truncation cap", kDnAnchor);
        dn = 0;
      }
    }
    res.d.push_back(dn);
    if (dn == 0) {
      res.report.items.push_back({"factorization n=" + std::to_string(n), Status::Undecidable,
                                  "d_n = 0 blocks the predecessor sphere", kDnAnchor});
      continue;
    }
    int t = static_cast<int>(dn) + 1;
    Tso s = sset_sphere(static_cast<int>(dn) - 1, t);
    Tso r = sset_build(f.seq.ctor, p, t);
    auto maps = hom_set(s, r);
    bool all = true;
    std::string w;
    for (auto& mp : maps)
      if (!factors_through_point(s, r, mp)) {
        all = false;
        w = "a non-constant map";
        break;
      }
    res.report.add(
        "factorization n=" + std::to_string(n) + " (" + std::to_string(maps.size()) + " maps)",
        all, w, kDnAnchor);
  }
  res.bound = bound < 0 ? std::max(1L, static_cast<long>(window) / 4) : bound;
  res.diverges = true;
  for (long n = (window + 1) / 2; n <= window; ++n)
    if (res.d[n] < res.bound) res.diverges = false;
  return res;
}

}  // namespace fq
