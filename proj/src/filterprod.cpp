#include "fq/filterprod.hpp"

#include <algorithm>

namespace fq {

Report validate_subset_filter(const SubsetFilter& f) {
  Report rep;
  rep.subject = "subset filter";
  unsigned full = (1u << f.index_size) - 1;
  bool refs = true;
  for (unsigned s : f.members)
    if (s > full) {
      rep.fail("subset-in-range", std::to_string(s));
      refs = false;
    }
  if (!refs) return rep;
  rep.pass("subsets-in-range");

  rep.add("non-empty", !f.members.empty(), "empty carrier");
  if (f.members.empty()) return rep;

  auto in = [&](unsigned s) {
    return std::find(f.members.begin(), f.members.end(), s) != f.members.end();
  };
  bool up = true;
  for (unsigned s : f.members)
    for (unsigned t = 0; t <= full; ++t)
      if ((s & t) == s && !in(t)) {
        rep.fail("upward-closed", std::to_string(s) + " <= " + std::to_string(t));
        up = false;
      }
  if (up) rep.pass("upward-closed");

  bool meets = true;
  for (unsigned s : f.members)
    for (unsigned t : f.members)
      if (!in(s & t)) {
        rep.fail("intersection-closed",
                 std::to_string(s) + " & " + std::to_string(t));
        meets = false;
      }
  if (meets) rep.pass("intersection-closed");
  return rep;
}

SubsetFilter principal_subset_filter(int index_size, unsigned s) {
  SubsetFilter f;
  f.index_size = index_size;
  unsigned full = (1u << index_size) - 1;
  for (unsigned t = 0; t <= full; ++t)
    if ((s & t) == s) f.members.push_back(t);
  return f;
}

std::unique_ptr<FilterProduct> finite_filter_product(const FinCategory& c, int index_size,
                                                     const SubsetFilter& phi,
                                                     Report* out_report) {
  Report rep;
  rep.subject = "filter product of " + c.name + "^" + std::to_string(index_size);
  auto fail = [&]() -> std::unique_ptr<FilterProduct> {
    if (out_report) *out_report = rep;
    return nullptr;
  };

  Report frep = validate_subset_filter(phi);
  rep.merge(frep);
  if (!frep.ok() || phi.index_size != index_size) {
    if (phi.index_size != index_size) rep.fail("index-size-matches", "");
    return fail();
  }

  auto z = strict_initial_object(c);
  rep.add("strict-initial-exists", z.has_value(), c.name);
  auto t = terminal_object(c);
  rep.add("terminal-exists", t.has_value(), c.name);
  if (!z || !t) return fail();

  auto r = std::make_unique<FilterProduct>();
  r->power = power_category(c, index_size, &r->info);
  r->poset = subterminal_poset(r->power);

  unsigned full = (1u << index_size) - 1;
  r->u_objects.assign(full + 1, FinCategory::kNone);
  bool subs = true;
  for (unsigned s = 0; s <= full; ++s) {
    std::vector<int> tup(index_size);
    for (int i = 0; i < index_size; ++i) tup[i] = (s >> i) & 1 ? *t : *z;
    int obj = r->info.obj_lookup.at(tup);
    r->u_objects[s] = r->poset.representative(obj);
    if (r->u_objects[s] == FinCategory::kNone) {
      rep.fail("component-family-subterminal", r->power.objects[obj]);
      subs = false;
    }
  }
  if (!subs) return fail();
  rep.pass("component-family-subterminal");

  std::vector<int> members;
  for (unsigned s : phi.members) members.push_back(r->u_objects[s]);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Report mrep;
  auto filt = make_filter(r->poset, members, &mrep);
  rep.merge(mrep);
  if (!filt) return fail();
  r->filter = *filt;

  Report qrep;
  auto q = filter_quotient(r->power, r->filter, &qrep);
  rep.merge(qrep);
  if (!q) return fail();
  r->quotient = std::move(*q);

  if (out_report) *out_report = rep;
  return r;
}

// ---- symbolic sequences ----

long eval_sequence(const EventualSequence& s, long n) {
  auto it = s.exceptions.find(n);
  if (it != s.exceptions.end()) return it->second;
  switch (s.tail) {
    case EventualSequence::Tail::Constant: return s.value;
    case EventualSequence::Tail::Identity: return n + s.offset;
    case EventualSequence::Tail::FloorHalf: return n / 2 + s.offset;
    case EventualSequence::Tail::Parity: return n % 2 + s.offset;
  }
  return 0;
}

bool known_sequence_ctor(const std::string& ctor) {
  return ctor.empty() || ctor == "sphere" || ctor == "simplex" || ctor == "constant-object";
}

namespace {

// do the pure tails agree on a cofinite set?
bool tails_eventually_equal(const EventualSequence& a, const EventualSequence& b) {
  using T = EventualSequence::Tail;
  if (a.tail == b.tail) {
    if (a.tail == T::Constant) return a.value == b.value;
    return a.offset == b.offset;
  }
  // Mixed tails never agree cofinitely: an unbounded tail (identity, floor
  // half) outgrows any bounded one, identity minus floor half is unbounded,
  // and constant vs parity disagrees on a full residue class forever.
  return false;
}

}  // namespace

Verdict frechet_germ_eq(const EventualSequence& s, const EventualSequence& t) {
  if (!known_sequence_ctor(s.ctor) || !known_sequence_ctor(t.ctor))
    return Verdict::Undecidable;
  if (s.ctor != t.ctor) {
    // distinct known constructors yield distinct values everywhere the
    // numeric outputs are formed, so agreement is at most the exception set
    return Verdict::NotEqual;
  }
  return tails_eventually_equal(s, t) ? Verdict::Equal : Verdict::NotEqual;
}

GermPartition internal_naturals(const std::vector<EventualSequence>& sample) {
  GermPartition p;
  int n = static_cast<int>(sample.size());
  std::vector<int> cls(n, -1);
  std::vector<bool> bad(n, false);
  for (int i = 0; i < n; ++i)
    bad[i] = frechet_germ_eq(sample[i], sample[i]) == Verdict::Undecidable;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    if (bad[i]) {
      cls[i] = static_cast<int>(p.classes.size());
      p.classes.push_back({i});
      p.undecidable.push_back(true);
      continue;
    }
    int id = static_cast<int>(p.classes.size());
    cls[i] = id;
    p.classes.push_back({i});
    p.undecidable.push_back(false);
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && !bad[j] && frechet_germ_eq(sample[i], sample[j]) == Verdict::Equal) {
        cls[j] = id;
        p.classes[id].push_back(j);
      }
  }
  return p;
}

std::vector<EventualSequence> distinct_germ_family(int k) {
  std::vector<EventualSequence> v;
  for (int i = 0; i < k; ++i) {
    EventualSequence s;
    s.tail = EventualSequence::Tail::Constant;
    s.value = i;
    v.push_back(s);
  }
  return v;
}

}  // namespace fq
