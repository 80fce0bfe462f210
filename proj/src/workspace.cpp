#include "fq/workspace.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

namespace fq {

namespace {

constexpr const char* kParseAnchor = "cli/parse";
constexpr const char* kResolveAnchor = "cli/resolve";
constexpr const char* kSchemaVersion = "fq.report.v1";

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

const std::vector<std::string> kSectionKinds = {"category", "filter",        "class", "model",
                                                "filterproduct", "family", "shapes"};

}  // namespace

std::string WorkspaceDocument::Section::first(const std::string& key) const {
  for (auto& e : entries)
    if (e.key == key) return e.value;
  return "";
}

const WorkspaceDocument::Section* WorkspaceDocument::find(const std::string& kind,
                                                          const std::string& name) const {
  for (auto& s : sections)
    if (s.kind == kind && s.name == name) return &s;
  return nullptr;
}

std::optional<WorkspaceDocument> parse_workspace(const std::string& text, std::string* error) {
  WorkspaceDocument doc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto err = [&](const std::string& msg) {
    if (error) *error = "line " + std::to_string(lineno) + ": " + msg;
    return std::nullopt;
  };
  bool saw_workspace = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (trim(line).empty()) continue;
    bool indented = line[0] == ' ' || line[0] == '\t';
    auto toks = tokens(line);
    if (indented) {
      if (doc.sections.empty()) return err("entry before any section");
      std::string value = trim(trim(line).substr(toks[0].size()));
      doc.sections.back().entries.push_back({toks[0], value});
      continue;
    }
    if (toks[0] == "workspace") {
      if (saw_workspace) return err("duplicate workspace header");
      if (toks.size() != 2) return err("workspace header needs exactly one name");
      doc.name = toks[1];
      saw_workspace = true;
      continue;
    }
    if (std::find(kSectionKinds.begin(), kSectionKinds.end(), toks[0]) == kSectionKinds.end())
      return err("unknown section kind '" + toks[0] + "'");
    if (toks.size() != 2) return err("section header needs exactly one name");
    if (doc.find(toks[0], toks[1])) return err("duplicate section " + toks[0] + " " + toks[1]);
    doc.sections.push_back({toks[0], toks[1], {}});
  }
  if (!saw_workspace) {
    lineno = 1;
    return err("missing workspace header");
  }
  return doc;
}

std::string serialize_workspace(const WorkspaceDocument& doc) {
  std::ostringstream out;
  out << "workspace " << doc.name << "\n";
  for (auto& s : doc.sections) {
    out << "\n" << s.kind << " " << s.name << "\n";
    for (auto& e : s.entries) out << "  " << e.key << " " << e.value << "\n";
  }
  return out.str();
}

// ---- resolution ----

namespace {

/// Object lookup honoring the "empty" alias for the initial finite set "0".
int find_object_aliased(const FinCategory& c, std::string name) {
  int x = c.find_object(name);
  if (x >= 0) return x;
  std::string::size_type pos;
  while ((pos = name.find("empty")) != std::string::npos) name.replace(pos, 5, "0");
  return c.find_object(name);
}

bool resolve_one_category(Workspace& ws, const WorkspaceDocument::Section& s) {
  // returns false when a dependency is not resolved yet
  auto& rep = ws.resolution;
  Workspace::Category entry;
  if (!s.first("objects").empty()) {
    RawCategory raw;
    raw.name = s.name;
    for (auto& e : s.entries) {
      auto t = tokens(e.value);
      if (e.key == "objects") {
        for (auto& o : t) raw.objects.push_back(o);
      } else if (e.key == "arrow" && t.size() == 3) {
        raw.arrows.push_back({t[0], t[1], t[2]});
      } else if (e.key == "identity" && t.size() == 2) {
        raw.identities.push_back({t[0], t[1]});
      } else if (e.key == "compose" && t.size() == 3) {
        raw.composites.push_back({t[0], t[1], t[2]});
      } else {
        rep.fail("category " + s.name, "bad entry: " + e.key + " " + e.value, kResolveAnchor);
        return true;
      }
    }
    Report vrep;
    auto cat = build_category(raw, &vrep);
    if (!cat) {
      rep.fail("category " + s.name, vrep.first_failure(), kResolveAnchor);
      return true;
    }
    entry.cat = std::make_unique<FinCategory>(std::move(*cat));
  } else if (!s.entries.empty()) {
    auto& e = s.entries[0];
    auto t = tokens(e.value);
    if (e.key == "finset" && t.size() == 1) {
      entry.cat = std::make_unique<FinCategory>(finset_category(std::stoi(t[0])));
    } else if (e.key == "product" && t.size() == 2) {
      auto a = ws.categories.find(t[0]);
      auto b = ws.categories.find(t[1]);
      if (a == ws.categories.end() || b == ws.categories.end()) return false;
      entry.cat = std::make_unique<FinCategory>(
          product_category(*a->second.cat, *b->second.cat, &entry.prod_info));
      entry.is_product = true;
    } else if (e.key == "arrow" && t.size() == 1) {
      auto a = ws.categories.find(t[0]);
      if (a == ws.categories.end()) return false;
      entry.cat = std::make_unique<FinCategory>(arrow_category(*a->second.cat));
    } else {
      rep.fail("category " + s.name, "unknown construction: " + e.key, kResolveAnchor);
      return true;
    }
  } else {
    rep.fail("category " + s.name, "empty section", kResolveAnchor);
    return true;
  }
  entry.cat->name = s.name;
  entry.poset = std::make_unique<SubterminalPoset>(subterminal_poset(*entry.cat));
  entry.products = std::make_unique<ProductTable>(*entry.cat);
  ws.categories.emplace(s.name, std::move(entry));
  return true;
}

Workspace::Category* need_category(Workspace& ws, const std::string& name,
                                   const std::string& where) {
  auto it = ws.categories.find(name);
  if (it == ws.categories.end()) {
    ws.resolution.fail(where, "unresolved category reference '" + name + "'", kResolveAnchor);
    return nullptr;
  }
  return &it->second;
}

void resolve_filter(Workspace& ws, const WorkspaceDocument::Section& s) {
  auto& rep = ws.resolution;
  std::string where = "filter " + s.name;
  if (s.entries.size() != 1) {
    rep.fail(where, "needs exactly one entry", kResolveAnchor);
    return;
  }
  auto& e = s.entries[0];
  auto t = tokens(e.value);
  if (t.empty()) {
    rep.fail(where, "missing category reference", kResolveAnchor);
    return;
  }
  auto* c = need_category(ws, t[0], where);
  if (!c) return;
  std::optional<Filter> phi;
  Report frep;
  if (e.key == "trivial" && t.size() == 1) {
    phi = trivial_filter(*c->poset);
    if (!phi) rep.fail(where, "no greatest subterminal in " + t[0], kResolveAnchor);
  } else if (e.key == "principal" && t.size() == 2) {
    int obj = find_object_aliased(*c->cat, t[1]);
    int u = obj < 0 ? FinCategory::kNone : c->poset->representative(obj);
    if (u == FinCategory::kNone) {
      rep.fail(where, "'" + t[1] + "' is not a subterminal object of " + t[0], kResolveAnchor);
      return;
    }
    phi = principal_filter(*c->poset, u);
    if (!phi) rep.fail(where, "principal filter construction failed", kResolveAnchor);
  } else if (e.key == "members" && t.size() >= 2) {
    std::vector<int> members;
    for (std::size_t i = 1; i < t.size(); ++i) {
      int obj = find_object_aliased(*c->cat, t[i]);
      int u = obj < 0 ? FinCategory::kNone : c->poset->representative(obj);
      if (u == FinCategory::kNone) {
        rep.fail(where, "'" + t[i] + "' is not a subterminal object of " + t[0], kResolveAnchor);
        return;
      }
      members.push_back(u);
    }
    phi = make_filter(*c->poset, members, &frep);
    if (!phi) rep.fail(where, frep.first_failure(), kResolveAnchor);
  } else {
    rep.fail(where, "unknown filter form: " + e.key, kResolveAnchor);
  }
  if (phi) ws.filters.emplace(s.name, Workspace::NamedFilter{t[0], std::move(*phi)});
}

void resolve_class(Workspace& ws, const WorkspaceDocument::Section& s) {
  auto& rep = ws.resolution;
  std::string where = "class " + s.name;
  if (s.entries.size() != 1) {
    rep.fail(where, "needs exactly one entry", kResolveAnchor);
    return;
  }
  auto& e = s.entries[0];
  auto t = tokens(e.value);
  if (t.empty()) {
    rep.fail(where, "missing category reference", kResolveAnchor);
    return;
  }
  auto* c = need_category(ws, t[0], where);
  if (!c) return;
  std::optional<MorphismClass> cls;
  if (e.key == "all" && t.size() == 1) cls = class_all(*c->cat);
  else if (e.key == "isos" && t.size() == 1) cls = class_isos(*c->cat);
  else if (e.key == "identities" && t.size() == 1) cls = class_identities(*c->cat);
  else if (e.key == "arrows") {
    std::vector<int> arrows;
    for (std::size_t i = 1; i < t.size(); ++i) {
      int f = c->cat->find_arrow(t[i]);
      if (f < 0) {
        rep.fail(where, "unknown arrow '" + t[i] + "' in " + t[0], kResolveAnchor);
        return;
      }
      arrows.push_back(f);
    }
    cls = class_explicit(*c->cat, arrows, s.name);
  } else {
    rep.fail(where, "unknown class form: " + e.key, kResolveAnchor);
  }
  if (cls) {
    cls->name = s.name;
    ws.classes.emplace(s.name, Workspace::NamedClass{t[0], std::move(*cls)});
  }
}

void resolve_model(Workspace& ws, const WorkspaceDocument::Section& s) {
  auto& rep = ws.resolution;
  std::string where = "model " + s.name;
  std::string catname = s.first("category");
  auto* c = catname.empty() ? nullptr : need_category(ws, catname, where);
  if (!c) {
    if (catname.empty()) rep.fail(where, "missing category entry", kResolveAnchor);
    return;
  }
  auto cls_of = [&](const std::string& spec) -> std::optional<MorphismClass> {
    if (spec == "all") return class_all(*c->cat);
    if (spec == "isos") return class_isos(*c->cat);
    if (spec == "identities") return class_identities(*c->cat);
    auto it = ws.classes.find(spec);
    if (it == ws.classes.end() || it->second.cat != catname) {
      rep.fail(where, "unresolved class reference '" + spec + "'", kResolveAnchor);
      return std::nullopt;
    }
    return it->second.cls;
  };
  auto C = cls_of(s.first("cofibrations"));
  auto F = cls_of(s.first("fibrations"));
  auto W = cls_of(s.first("weak"));
  if (!C || !F || !W) return;
  ModelStructureData m;
  m.cat = c->cat.get();
  m.C = std::move(*C);
  m.F = std::move(*F);
  m.W = std::move(*W);
  ws.models.emplace(s.name, Workspace::NamedModel{catname, std::move(m)});
}

std::optional<unsigned> parse_subset(const std::string& lit, int copies) {
  if (lit.size() < 2 || lit.front() != '{' || lit.back() != '}') return std::nullopt;
  unsigned mask = 0;
  std::string body = lit.substr(1, lit.size() - 2);
  std::istringstream in(body);
  std::string part;
  while (std::getline(in, part, ',')) {
    part = trim(part);
    if (part.empty()) return std::nullopt;
    int i = std::stoi(part);
    if (i < 0 || i >= copies) return std::nullopt;
    mask |= 1u << i;
  }
  return mask;
}

void resolve_filterproduct(Workspace& ws, const WorkspaceDocument::Section& s) {
  auto& rep = ws.resolution;
  std::string where = "filterproduct " + s.name;
  std::string base = s.first("base");
  if (!need_category(ws, base, where)) return;
  std::string copies_s = s.first("copies");
  if (copies_s.empty()) {
    rep.fail(where, "missing copies entry", kResolveAnchor);
    return;
  }
  int copies = std::stoi(copies_s);
  Workspace::NamedFilterProduct fp;
  fp.base = base;
  fp.copies = copies;
  fp.filter.index_size = copies;
  for (auto& e : s.entries) {
    if (e.key == "base" || e.key == "copies") continue;
    auto mask = parse_subset(e.value, copies);
    if (!mask) {
      rep.fail(where, "bad subset literal '" + e.value + "'", kResolveAnchor);
      return;
    }
    if (e.key == "principal") {
      fp.filter = principal_subset_filter(copies, *mask);
    } else if (e.key == "member") {
      fp.filter.members.push_back(*mask);
    } else {
      rep.fail(where, "unknown entry: " + e.key, kResolveAnchor);
      return;
    }
  }
  auto frep = validate_subset_filter(fp.filter);
  if (!frep.ok()) {
    rep.fail(where, frep.first_failure(), kResolveAnchor);
    return;
  }
  ws.filterproducts.emplace(s.name, std::move(fp));
}

void resolve_family(Workspace& ws, const WorkspaceDocument::Section& s) {
  auto& rep = ws.resolution;
  std::string where = "family " + s.name;
  SymbolicFamily f;
  f.seq.ctor = s.first("ctor");
  std::string tail = s.first("tail");
  using T = EventualSequence::Tail;
  if (tail == "constant" || tail.empty()) f.seq.tail = T::Constant;
  else if (tail == "identity") f.seq.tail = T::Identity;
  else if (tail == "floorhalf") f.seq.tail = T::FloorHalf;
  else if (tail == "parity") f.seq.tail = T::Parity;
  else {
    rep.fail(where, "unknown tail '" + tail + "'", kResolveAnchor);
    return;
  }
  for (auto& e : s.entries) {
    if (e.key == "value") f.seq.value = std::stol(e.value);
    else if (e.key == "offset") f.seq.offset = std::stol(e.value);
    else if (e.key == "except") {
      auto t = tokens(e.value);
      if (t.size() != 2) {
        rep.fail(where, "except needs an index and a value", kResolveAnchor);
        return;
      }
      f.seq.exceptions[std::stol(t[0])] = std::stol(t[1]);
    } else if (e.key != "ctor" && e.key != "tail") {
      rep.fail(where, "unknown entry: " + e.key, kResolveAnchor);
      return;
    }
  }
  ws.families.emplace(s.name, std::move(f));
}

}  // namespace

std::unique_ptr<Workspace> resolve_workspace(const WorkspaceDocument& doc) {
  auto ws = std::make_unique<Workspace>();
  ws->doc = doc;
  ws->resolution.subject = "resolve/" + doc.name;

  // categories first, with a fixpoint loop for cross references
  std::vector<const WorkspaceDocument::Section*> pending;
  for (auto& s : doc.sections)
    if (s.kind == "category") pending.push_back(&s);
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    std::vector<const WorkspaceDocument::Section*> next;
    for (auto* s : pending) {
      if (resolve_one_category(*ws, *s)) progress = true;
      else next.push_back(s);
    }
    pending.swap(next);
  }
  for (auto* s : pending)
    ws->resolution.fail("category " + s->name, "unresolved category reference", kResolveAnchor);

  for (auto& s : doc.sections) {
    if (s.kind == "filter") resolve_filter(*ws, s);
    else if (s.kind == "class") resolve_class(*ws, s);
    else if (s.kind == "model") resolve_model(*ws, s);
    else if (s.kind == "filterproduct") resolve_filterproduct(*ws, s);
    else if (s.kind == "family") resolve_family(*ws, s);
    else if (s.kind == "shapes") {
      if (s.first("builtin") != "interval-fragment")
        ws->resolution.fail("shapes " + s.name, "unknown builtin '" + s.first("builtin") + "'",
                            kResolveAnchor);
      else
        ws->shapes.push_back(s.name);
    }
  }
  ws->ok = ws->resolution.ok();
  return ws;
}

// ---- commands ----

namespace {

struct SelectedFilter {
  std::string name, cat;
  Filter filter;
};

std::vector<SelectedFilter> select_filters(Workspace& ws, const RunFlags& flags, Report& err) {
  std::vector<SelectedFilter> out;
  if (flags.filter.empty()) {
    for (auto& [name, nf] : ws.filters) out.push_back({name, nf.cat, nf.filter});
    return out;
  }
  auto it = ws.filters.find(flags.filter);
  if (it != ws.filters.end()) {
    out.push_back({flags.filter, it->second.cat, it->second.filter});
    return out;
  }
  if (flags.filter == "trivial") {
    for (auto& [cname, c] : ws.categories)
      if (auto phi = trivial_filter(*c.poset))
        out.push_back({"trivial:" + cname, cname, *phi});
    return out;
  }
  if (flags.filter.rfind("principal:", 0) == 0) {
    std::string objname = flags.filter.substr(10);
    for (auto& [cname, c] : ws.categories) {
      int obj = find_object_aliased(*c.cat, objname);
      if (obj < 0) continue;
      int u = c.poset->representative(obj);
      if (u == FinCategory::kNone) continue;
      if (auto phi = principal_filter(*c.poset, u))
        out.push_back({"principal:" + cname + ":" + objname, cname, *phi});
    }
    if (out.empty())
      err.fail("filter-flag", "'" + objname + "' is not a subterminal object of any category",
               kResolveAnchor);
    return out;
  }
  err.fail("filter-flag", "unknown filter spec '" + flags.filter + "'", kResolveAnchor);
  return out;
}

bool filter_oracle(const SubterminalPoset& p, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<int> idx;
  for (int m : members) {
    int i = p.index_of(m);
    if (i < 0) return false;
    idx.push_back(i);
  }
  auto in = [&](int i) { return std::find(idx.begin(), idx.end(), i) != idx.end(); };
  for (int i : idx)
    for (int j = 0; j < static_cast<int>(p.elems.size()); ++j)
      if (p.leq[i][j] && !in(j)) return false;
  for (int i : idx)
    for (int j : idx) {
      bool found = false;
      for (int k : idx)
        if (p.leq[k][i] && p.leq[k][j]) { found = true; break; }
      if (!found) return false;
    }
  return true;
}

std::vector<Report> cmd_validate(Workspace& ws, const RunFlags& flags) {
  std::vector<Report> out;
  if (!ws.resolution.items.empty() || !ws.ok) out.push_back(ws.resolution);
  for (auto& s : ws.doc.sections) {
    Report rep;
    rep.subject = "validate/" + s.kind + "/" + s.name;
    if (s.kind == "category") {
      auto it = ws.categories.find(s.name);
      if (it == ws.categories.end()) continue;  // already reported by resolution
      auto& c = *it->second.cat;
      rep.merge(validate_category(to_raw(c)));
      rep.pass("sizes: " + std::to_string(c.num_objects()) + " objects, " +
               std::to_string(c.num_arrows()) + " arrows, " +
               std::to_string(it->second.poset->elems.size()) + " subterminal classes");
    } else if (s.kind == "filter") {
      auto it = ws.filters.find(s.name);
      if (it == ws.filters.end()) continue;
      rep.merge(validate_filter(*it->second.filter.poset, it->second.filter.members));
      rep.pass("members: " + std::to_string(it->second.filter.members.size()) + ", minimum " +
               it->second.filter.poset->cat->obj_name(it->second.filter.minimum));
    } else if (s.kind == "class") {
      auto it = ws.classes.find(s.name);
      if (it == ws.classes.end()) continue;
      rep.pass("size: " + std::to_string(it->second.cls.size()) + " arrows");
    } else if (s.kind == "model") {
      auto it = ws.models.find(s.name);
      if (it == ws.models.end()) continue;
      auto& m = it->second.data;
      rep.add("identities-weak", class_identities(*m.cat).size() ==
                  class_intersection(class_identities(*m.cat), m.W).size(),
              "some identity is not a weak equivalence", "model/classes");
      rep.pass("class sizes: C " + std::to_string(m.C.size()) + ", F " +
               std::to_string(m.F.size()) + ", W " + std::to_string(m.W.size()));
    } else if (s.kind == "filterproduct") {
      auto it = ws.filterproducts.find(s.name);
      if (it == ws.filterproducts.end()) continue;
      rep.merge(validate_subset_filter(it->second.filter));
    } else if (s.kind == "family") {
      auto it = ws.families.find(s.name);
      if (it == ws.families.end()) continue;
      rep.add("known-ctor", known_family_ctor(it->second.seq.ctor),
              "unknown constructor '" + it->second.seq.ctor + "'", "sset/build");
    } else if (s.kind == "shapes") {
      rep.pass("builtin: interval-fragment");
    }
    out.push_back(std::move(rep));
  }
  if (flags.seed >= 0) {
    Report rep;
    rep.subject = "validate/random-filters";
    std::mt19937 rng(static_cast<unsigned>(flags.seed));
    int trials = 0, agreements = 0;
    for (auto& [cname, c] : ws.categories) {
      auto& p = *c.poset;
      int n = static_cast<int>(p.elems.size());
      if (n == 0) continue;
      for (int t = 0; t < 25; ++t) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
          if (rng() & 1u) members.push_back(p.elems[i]);
        bool verdict = validate_filter(p, members).ok();
        bool expect = filter_oracle(p, members);
        ++trials;
        if (verdict == expect) ++agreements;
        else
          rep.fail("filter-law-agreement", cname + " trial " + std::to_string(t),
                   "filter/laws");
      }
    }
    rep.pass("agreements: " + std::to_string(agreements) + "/" + std::to_string(trials) +
             " (seed " + std::to_string(flags.seed) + ")", "filter/laws");
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Report> cmd_quotient(Workspace& ws, const RunFlags& flags) {
  std::vector<Report> out;
  Report err;
  err.subject = "quotient/select";
  auto selected = select_filters(ws, flags, err);
  if (!err.items.empty()) out.push_back(err);
  for (auto& sel : selected) {
    Report rep;
    rep.subject = "quotient/" + sel.name;
    Report brep;
    auto q = filter_quotient(*ws.categories.at(sel.cat).cat, sel.filter, &brep);
    rep.merge(brep);
    if (!q) {
      out.push_back(std::move(rep));
      continue;
    }
    rep.pass("quotient sizes: " + std::to_string(q->quotient.num_objects()) + " objects, " +
             std::to_string(q->quotient.num_arrows()) + " arrows");
    rep.merge(verify_projection(*q));
    rep.merge(germ_mono_characterization(*q));
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Report> cmd_product(Workspace& ws, const RunFlags&) {
  std::vector<Report> out;
  for (auto& [name, fp] : ws.filterproducts) {
    Report rep;
    rep.subject = "product/" + name;
    auto& base = *ws.categories.at(fp.base).cat;
    Report brep;
    auto prod = finite_filter_product(base, fp.copies, fp.filter, &brep);
    rep.merge(brep);
    if (!prod) {
      out.push_back(std::move(rep));
      continue;
    }
    rep.pass("quotient sizes: " + std::to_string(prod->quotient.quotient.num_objects()) +
             " objects, " + std::to_string(prod->quotient.quotient.num_arrows()) + " arrows");
    // when the filter is principal at a singleton index set, the product
    // collapses to the base category
    unsigned least = ~0u;
    for (unsigned m : fp.filter.members)
      if (__builtin_popcount(m) < __builtin_popcount(least)) least = m;
    if (__builtin_popcount(least) == 1) {
      auto eq = find_equivalence(prod->quotient.quotient, base);
      rep.add("principal-collapse", eq.has_value(), "no equivalence with the base found",
              "filterprod/collapse");
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Report> cmd_model_check(Workspace& ws, const RunFlags& flags) {
  std::vector<Report> out;
  for (auto& [name, nm] : ws.models) {
    Report rep;
    rep.subject = "model/" + name;
    rep.merge(verify_model_structure(nm.data));
    rep.merge(check_right_properness(nm.data));
    out.push_back(std::move(rep));

    Report err;
    err.subject = "model/" + name + "/select";
    auto selected = select_filters(ws, flags, err);
    if (!err.items.empty()) out.push_back(err);
    for (auto& sel : selected) {
      if (sel.cat != nm.cat) continue;
      Report trep;
      trep.subject = "model/" + name + "/" + sel.name;
      auto& centry = ws.categories.at(sel.cat);
      trep.merge(validate_model_filter(nm.data, *centry.products, sel.filter));
      auto q = filter_quotient(*centry.cat, sel.filter);
      if (!q) {
        trep.fail("quotient-exists", "filter quotient construction failed", "filtquot/build");
        out.push_back(std::move(trep));
        continue;
      }
      auto transferred = transfer_model_structure(nm.data, *q);
      trep.merge(transferred.report);
      out.push_back(std::move(trep));
    }
  }
  return out;
}

std::vector<Report> cmd_shapes_check(Workspace& ws, const RunFlags& flags) {
  std::vector<Report> out;
  for (auto& name : ws.shapes) {
    Report rep;
    rep.subject = "shapes/" + name;
    auto b = builtin_interval_fragment();
    rep.merge(validate_shapes_tuple(b->tuple));
    rep.merge(check_strict_interval(b->tuple.theory, b->tuple.interval));
    ShapesFilterTriple triple = b->triple;
    std::optional<Filter> override_m;
    if (!flags.filter.empty()) {
      if (flags.filter == "trivial") {
        override_m = trivial_filter(b->m_poset);
      } else if (flags.filter.rfind("principal:", 0) == 0) {
        std::string objname = flags.filter.substr(10);
        int obj = find_object_aliased(b->m_cat, objname);
        int u = obj < 0 ? FinCategory::kNone : b->m_poset.representative(obj);
        if (u != FinCategory::kNone) override_m = principal_filter(b->m_poset, u);
      }
      if (override_m) triple.phi_m = &*override_m;
      else
        rep.fail("filter-flag", "'" + flags.filter + "' does not name a subterminal of the model category",
                 kResolveAnchor);
    }
    auto q = quotient_shapes_tuple(b->tuple, triple);
    rep.merge(q->report);
    rep.add("quotient-complete", q->complete, "the quotient tuple was not fully assembled",
            "shapes/quotient");
    if (q->complete) {
      rep.merge(validate_shapes_tuple(q->tuple));
      rep.merge(check_strict_interval(q->tuple.theory, q->tuple.interval));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Report> cmd_sset_demo(Workspace& ws, const RunFlags& flags) {
  std::vector<Report> out;
  {
    Report rep;
    rep.subject = "sset/interval";
    SsetContext ctx;
    auto u = FamilyObject{sset_terminal(ctx.d)};
    rep.merge(unique_arrow_check(ctx, u, interval_object(ctx, u)));
    int cells = std::min(flags.max_size, 4);
    auto res = unique_arrow_search(ctx, u, cells);
    rep.merge(res.report);
    rep.pass("search (<= " + std::to_string(cells) + " cells): " + std::to_string(res.examined) +
             " examined, " + std::to_string(res.passing) + " passing, " +
             std::to_string(res.alternatives) + " alternatives");
    out.push_back(std::move(rep));
  }
  for (auto& [name, fam] : ws.families) {
    Report rep;
    rep.subject = "sset/" + name;
    auto decision = frechet_externally_discrete(fam, 2);
    CheckResult d;
    d.check = std::string("externally-discrete: ") +
              (decision == Decision::Yes ? "yes" : decision == Decision::No ? "no" : "unknown");
    d.status = decision == Decision::Undecidable ? Status::Undecidable : Status::Pass;
    d.anchor = "sset/discrete";
    rep.items.push_back(d);
    auto res = dn_sequence(fam, flags.window);
    rep.merge(res.report);
    std::string table;
    for (std::size_t i = 0; i < res.d.size() && i <= 12; ++i)
      table += (i ? " " : "") + std::to_string(res.d[i]);
    if (res.d.size() > 13) table += " ...";
    rep.pass("d_n table (window " + std::to_string(flags.window) + "): " + table, "sset/dn");
    rep.pass(std::string("divergence verdict: ") + (res.diverges ? "diverges" : "bounded") +
             " at bound " + std::to_string(res.bound), "sset/dn");
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace

std::vector<Report> run_command(const std::string& command, Workspace& ws,
                                const RunFlags& flags) {
  if (command == "validate") return cmd_validate(ws, flags);
  if (command == "quotient") return cmd_quotient(ws, flags);
  if (command == "product") return cmd_product(ws, flags);
  if (command == "model-check") return cmd_model_check(ws, flags);
  if (command == "shapes-check") return cmd_shapes_check(ws, flags);
  if (command == "sset-demo") return cmd_sset_demo(ws, flags);
  if (command == "report") {
    std::vector<Report> out;
    for (const char* c : {"validate", "quotient", "product", "model-check", "shapes-check",
                          "sset-demo"}) {
      auto part = run_command(c, ws, flags);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  Report err;
  err.subject = "run";
  err.fail("command", "unknown command '" + command + "'", kParseAnchor);
  return {err};
}

bool reports_all_ok(const std::vector<Report>& reports) {
  for (auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

std::string render_reports(const std::vector<Report>& reports, const std::string& format) {
  std::ostringstream out;
  int checks = 0, failures = 0, undecidable = 0;
  if (format == "records") {
    for (auto& r : reports) {
      int sf = 0, su = 0;
      for (auto& it : r.items) {
        nlohmann::json j{{"schema", kSchemaVersion},
                         {"suite", r.subject},
                         {"check", it.check},
                         {"status", to_string(it.status)}};
        if (!it.witness.empty()) j["witness"] = it.witness;
        if (!it.anchor.empty()) j["anchor"] = it.anchor;
        out << j.dump() << "\n";
        ++checks;
        if (it.status == Status::Fail) ++sf, ++failures;
        if (it.status == Status::Undecidable) ++su, ++undecidable;
      }
      nlohmann::json s{{"schema", kSchemaVersion},
                       {"suite", r.subject},
                       {"summary", {{"checks", static_cast<int>(r.items.size())},
                                    {"failures", sf},
                                    {"undecidable", su}}}};
      out << s.dump() << "\n";
    }
    nlohmann::json t{{"schema", kSchemaVersion},
                     {"total", {{"suites", static_cast<int>(reports.size())},
                                {"checks", checks},
                                {"failures", failures},
                                {"undecidable", undecidable}}}};
    out << t.dump() << "\n";
    return out.str();
  }
  for (auto& r : reports) {
    out << "== " << r.subject << " ==\n";
    int sf = 0, su = 0;
    for (auto& it : r.items) {
      out << "  [" << to_string(it.status) << "] " << it.check;
      if (!it.witness.empty()) out << "  witness: " << it.witness;
      if (!it.anchor.empty()) out << "  {" << it.anchor << "}";
      out << "\n";
      ++checks;
      if (it.status == Status::Fail) ++sf, ++failures;
      if (it.status == Status::Undecidable) ++su, ++undecidable;
    }
    out << "  -> " << r.items.size() << " checks, " << sf << " failures, " << su
        << " undecidable\n\n";
  }
  out << "total: " << reports.size() << " suites, " << checks << " checks, " << failures
      << " failures, " << undecidable << " undecidable\n";
  return out.str();
}

}  // namespace fq
