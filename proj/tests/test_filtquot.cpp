#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fq/filtquot.hpp"

using namespace fq;

namespace {

struct PairSetup {
  FinCategory c2 = finset_category(2);
  ProductCategoryInfo pi;
  FinCategory pair;
  SubterminalPoset poset;
  PairSetup() {
    pair = product_category(c2, c2, &pi);
    poset = subterminal_poset(pair);
  }
  int obj(int a, int b) { return pi.pair_object(a, b); }
};

bool has_failure(const Report& rep, const std::string& check) {
  for (auto& it : rep.items)
    if (it.status == Status::Fail && it.check == check) return true;
  return false;
}

}  // namespace

TEST_CASE("filter validation") {
  PairSetup s;
  SUBCASE("the top-only filter is valid") {
    auto f = trivial_filter(s.poset);
    REQUIRE(f.has_value());
    CHECK(f->members.size() == 1);
    CHECK(f->minimum == s.obj(1, 1));
  }
  SUBCASE("principal up-sets are valid") {
    auto f = principal_filter(s.poset, s.obj(1, 0));
    REQUIRE(f.has_value());
    CHECK(f->members.size() == 2);
    CHECK(f->minimum == s.obj(1, 0));
    auto g = principal_filter(s.poset, s.obj(0, 0));
    REQUIRE(g.has_value());
    CHECK(g->members.size() == 4);
  }
  SUBCASE("a lone non-top member fails up-closure with a witness") {
    auto rep = validate_filter(s.poset, {s.obj(1, 0)});
    CHECK(!rep.ok());
    CHECK(has_failure(rep, "upward-closed"));
  }
  SUBCASE("non-representative members are rejected") {
    auto rep = validate_filter(s.poset, {s.obj(2, 2)});
    CHECK(has_failure(rep, "member-is-subterminal-representative"));
  }
  SUBCASE("non-directed subsets fail") {
    // {(1,0), (0,1), (1,1)} lacks a lower bound for the two incomparables
    auto rep = validate_filter(s.poset, {s.obj(1, 0), s.obj(0, 1), s.obj(1, 1)});
    CHECK(!rep.ok());
    CHECK(has_failure(rep, "downward-directed"));
  }
}

TEST_CASE("germ equality") {
  PairSetup s;
  ProductTable pt(s.pair);
  auto phi = principal_filter(s.poset, s.obj(1, 0));
  REQUIRE(phi.has_value());
  int top = s.obj(1, 1), w0 = s.obj(1, 0);
  int x = s.obj(1, 1), y = s.obj(2, 2);
  auto pxt = pt.product(x, top);
  REQUIRE(pxt.has_value());

  // arrows (1,1) -> (2,2) are pairs of points; germ equality forgets the
  // second coordinate once (1,0) is in the filter
  auto arr = [&](int a, int b) {
    return s.pi.pair_arrow(finset_arrow(s.c2, 1, 2, {a}), finset_arrow(s.c2, 1, 2, {b}));
  };
  // reps live on the chosen product x*top, an object isomorphic to (1,1)
  int via = pt.pairing(x, top, s.pair.identity[x], s.pair.hom(x, top)[0]).value();
  auto rep_of = [&](int f) { return s.pair.compose(f, s.pair.inverse(via).value()); };

  GermMorphism a{top, rep_of(arr(0, 0))};
  GermMorphism b{top, rep_of(arr(0, 1))};
  GermMorphism c{top, rep_of(arr(1, 1))};
  CHECK(germ_eq(s.pair, pt, *phi, x, a, a));
  CHECK(germ_eq(s.pair, pt, *phi, x, a, b));  // differ only in coordinate 2
  CHECK(!germ_eq(s.pair, pt, *phi, x, a, c));

  auto triv = trivial_filter(s.poset);
  REQUIRE(triv.has_value());
  CHECK(!germ_eq(s.pair, pt, *triv, x, a, b));  // no member below top identifies them
}

TEST_CASE("germ equality is an equivalence relation on all representatives") {
  PairSetup s;
  auto phi = principal_filter(s.poset, s.obj(1, 0));
  ProductTable pt(s.pair);
  int x = s.obj(2, 1), y = s.obj(2, 2);
  std::vector<GermMorphism> reps;
  for (int u : phi->members)
    for (int f : s.pair.hom(pt.product(x, u)->obj, y)) reps.push_back({u, f});
  REQUIRE(reps.size() > 4);
  for (auto& a : reps) CHECK(germ_eq(s.pair, pt, *phi, x, a, a));
  for (auto& a : reps)
    for (auto& b : reps) {
      bool ab = germ_eq(s.pair, pt, *phi, x, a, b);
      CHECK(ab == germ_eq(s.pair, pt, *phi, x, b, a));
      if (!ab) continue;
      for (auto& c : reps)
        if (germ_eq(s.pair, pt, *phi, x, b, c)) CHECK(germ_eq(s.pair, pt, *phi, x, a, c));
    }
}

TEST_CASE("trivial filter quotient is isomorphic to the base") {
  auto c2 = finset_category(2);
  auto poset = subterminal_poset(c2);
  auto phi = trivial_filter(poset);
  REQUIRE(phi.has_value());
  Report rep;
  auto q = filter_quotient(c2, *phi, &rep);
  REQUIRE_MESSAGE(q.has_value(), rep.first_failure());
  CHECK(rep.ok());
  CHECK(q->quotient.num_objects() == 3);
  CHECK(q->quotient.num_arrows() == 11);
  CHECK(find_category_isomorphism(q->quotient, c2).has_value());
  CHECK(is_functor(q->projection()));
}

TEST_CASE("pair category quotient at the first-coordinate filter") {
  PairSetup s;
  auto phi = principal_filter(s.poset, s.obj(1, 0));
  Report rep;
  auto q = filter_quotient(s.pair, *phi, &rep);
  REQUIRE_MESSAGE(q.has_value(), rep.first_failure());
  CHECK(rep.ok());
  CHECK(q->quotient.num_objects() == 9);
  CHECK(q->quotient.num_arrows() == 99);  // hom sizes collapse to coordinate 1

  SUBCASE("equivalent to the single factor") {
    auto eq = find_equivalence(q->quotient, s.c2);
    REQUIRE(eq.has_value());
    CHECK(is_functor(eq->fwd));
    CHECK(is_functor(eq->bwd));
  }

  SUBCASE("an arrow mono only in coordinate 1 becomes a germ mono") {
    int h = s.pi.pair_arrow(finset_arrow(s.c2, 1, 2, {0}), finset_arrow(s.c2, 2, 1, {0, 0}));
    CHECK(!s.pair.is_mono(h));
    CHECK(q->quotient.is_mono(q->project_arrow(h)));
  }

  SUBCASE("germ mono characterization holds exhaustively") {
    auto mono_rep = germ_mono_characterization(*q);
    CHECK_MESSAGE(mono_rep.ok(), mono_rep.first_failure());
  }
}

TEST_CASE("projection preservation battery") {
  SUBCASE("trivial filter preserves everything") {
    auto c2 = finset_category(2);
    auto poset = subterminal_poset(c2);
    auto q = filter_quotient(c2, *trivial_filter(poset));
    REQUIRE(q.has_value());
    auto rep = verify_projection(*q);
    CHECK_MESSAGE(rep.ok(), rep.first_failure());
  }
  SUBCASE("pair category with the first-coordinate filter preserves everything") {
    PairSetup s;
    auto q = filter_quotient(s.pair, *principal_filter(s.poset, s.obj(1, 0)));
    REQUIRE(q.has_value());
    auto rep = verify_projection(*q);
    CHECK_MESSAGE(rep.ok(), rep.first_failure());
  }
}

TEST_CASE("arrow category quotient at the codomain filter") {
  auto c2 = finset_category(2);
  auto ac = arrow_category(c2);
  auto poset = subterminal_poset(ac);
  int u = ac.find_object("[f0to1:-]");
  REQUIRE(u >= 0);
  auto phi = principal_filter(poset, u);
  REQUIRE(phi.has_value());
  CHECK(phi->members.size() == 2);
  Report rep;
  auto q = filter_quotient(ac, *phi, &rep);
  REQUIRE_MESSAGE(q.has_value(), rep.first_failure());
  CHECK(q->quotient.num_arrows() == 279);  // sum over pairs of codomain homs

  auto eq = find_equivalence(q->quotient, c2);
  REQUIRE(eq.has_value());
  CHECK(is_functor(eq->fwd));
  CHECK(is_functor(eq->bwd));

  ProjectionCheckOptions opts;
  opts.max_diagrams_per_shape = 400;
  auto prep = verify_projection(*q, opts);
  CHECK_MESSAGE(prep.ok(), prep.first_failure());
}

TEST_CASE("a corrupted quotient composition table is pinpointed") {
  PairSetup s;
  auto q = filter_quotient(s.pair, *principal_filter(s.poset, s.obj(1, 0)));
  REQUIRE(q.has_value());
  auto raw = to_raw(q->quotient);
  // redirect one non-identity composite to a parallel wrong arrow
  for (auto& comp : raw.composites) {
    int g = q->quotient.find_arrow(comp.g), f = q->quotient.find_arrow(comp.f);
    int gf = q->quotient.find_arrow(comp.gf);
    if (q->quotient.is_identity(g) || q->quotient.is_identity(f)) continue;
    const auto& hs = q->quotient.hom(q->quotient.arrows[f].dom, q->quotient.arrows[g].cod);
    if (hs.size() < 2) continue;
    comp.gf = q->quotient.arrows[hs[hs[0] == gf ? 1 : 0]].name;
    break;
  }
  auto vrep = validate_category(raw);
  CHECK(!vrep.ok());
  CHECK(!vrep.first_failure().empty());
}
