#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fq/model.hpp"

using namespace fq;

namespace {

bool has_failure(const Report& rep, const std::string& check) {
  for (auto& it : rep.items)
    if (it.status == Status::Fail && it.check.rfind(check, 0) == 0) return true;
  return false;
}

struct PairSetup {
  FinCategory c2 = finset_category(2);
  ProductCategoryInfo pi;
  FinCategory pair;
  SubterminalPoset poset;
  PairSetup() {
    pair = product_category(c2, c2, &pi);
    poset = subterminal_poset(pair);
  }
};

}  // namespace

TEST_CASE("diagonal fillers") {
  auto c = finset_category(2);
  int fold = finset_arrow(c, 2, 1, {0, 0});
  int point0 = finset_arrow(c, 1, 2, {0});
  int empty1 = finset_arrow(c, 0, 1, {});

  SUBCASE("isomorphisms lift against everything") {
    for (int i = 0; i < c.num_arrows(); ++i) {
      if (!c.is_iso(i)) continue;
      for (int p = 0; p < c.num_arrows(); ++p) CHECK(lifts_against(c, i, p));
    }
  }
  SUBCASE("empty into point lifts against the identity") {
    auto r = find_lift(c, empty1, c.identity[1], finset_arrow(c, 0, 1, {}), c.identity[1]);
    CHECK(r.commutes);
    CHECK(r.lift.has_value());
  }
  SUBCASE("the fold map does not lift against itself") {
    // any filler 1 -> 2 cannot split the fold on both points
    auto r = find_lift(c, fold, fold, c.identity[2], c.identity[1]);
    CHECK(r.commutes);
    CHECK(!r.lift.has_value());
    CHECK(!lifts_against(c, fold, fold));
  }
  SUBCASE("non-commuting squares are rejected") {
    int point1 = finset_arrow(c, 1, 2, {1});
    auto r = find_lift(c, c.identity[1], fold, point0, point1);
    (void)r;
    // p∘top = 0-point composed with fold lands on 0; bottom∘i is the 1-point
    auto bad = find_lift(c, c.identity[1], c.identity[2], point0, point1);
    CHECK(!bad.commutes);
    CHECK(!bad.lift.has_value());
  }
}

TEST_CASE("weak factorization systems on finite sets") {
  auto c = finset_category(2);
  CHECK(verify_wfs(c, class_isos(c), class_all(c)).ok());
  CHECK(verify_wfs(c, class_all(c), class_isos(c)).ok());

  auto bad = verify_wfs(c, class_identities(c), class_all(c));
  CHECK(!bad.ok());
  CHECK(has_failure(bad, "left-class-is-llp"));
}

TEST_CASE("model structure verification") {
  auto c = finset_category(2);
  ModelStructureData trivial_fib{&c, class_isos(c), class_all(c), class_all(c)};
  CHECK(verify_model_structure(trivial_fib).ok());

  ModelStructureData trivial_cof{&c, class_all(c), class_all(c), class_isos(c)};
  CHECK(verify_model_structure(trivial_cof).ok());

  ModelStructureData bad{&c, class_all(c), class_all(c), class_all(c)};
  auto rep = verify_model_structure(bad);
  CHECK(!rep.ok());
  CHECK(has_failure(rep, "lifting"));
}

TEST_CASE("two-of-three catches a deleted weak equivalence") {
  PairSetup s;
  auto w = class_isos(s.pair);
  int swap2 = finset_arrow(s.c2, 2, 2, {1, 0});
  int obj22 = s.pi.pair_object(2, 2);
  w.member[s.pair.identity[obj22]] = false;  // swap∘swap is no longer in W
  (void)swap2;
  ModelStructureData m{&s.pair, class_all(s.pair), class_all(s.pair), w};
  auto rep = verify_model_structure(m);
  CHECK(!rep.ok());
  CHECK(has_failure(rep, "two-of-three"));
}

TEST_CASE("model filter validation") {
  PairSetup s;
  ProductTable pt(s.pair);
  ModelStructureData m{&s.pair, class_all(s.pair), class_all(s.pair), class_isos(s.pair)};

  SUBCASE("trivial filter is a model filter") {
    auto phi = trivial_filter(s.poset);
    REQUIRE(phi.has_value());
    CHECK(validate_model_filter(m, pt, *phi).ok());
  }
  SUBCASE("principal coordinate filter is a model filter") {
    auto phi = principal_filter(s.poset, s.pi.pair_object(1, 0));
    REQUIRE(phi.has_value());
    CHECK(validate_model_filter(m, pt, *phi).ok());
  }
  SUBCASE("an explicit class pinned to one arrow is not product stable") {
    auto phi = principal_filter(s.poset, s.pi.pair_object(1, 0));
    int h = s.pi.pair_arrow(finset_arrow(s.c2, 2, 1, {0, 0}), finset_arrow(s.c2, 2, 1, {0, 0}));
    ModelStructureData bad{&s.pair, class_all(s.pair), class_all(s.pair),
                           class_explicit(s.pair, {h}, "just-fold")};
    auto rep = validate_model_filter(bad, pt, *phi);
    CHECK(!rep.ok());
    CHECK(has_failure(rep, "product-stable"));
  }
  SUBCASE("component-iso classes are product stable here") {
    // crossing with (1,0) or (1,1) keeps each component an isomorphism when
    // it was one, so stability holds for both coordinates
    auto phi = principal_filter(s.poset, s.pi.pair_object(1, 0));
    CHECK(check_product_stability(class_component_iso(s.pair, s.pi, s.c2, 0), pt, *phi).ok());
    CHECK(check_product_stability(class_component_iso(s.pair, s.pi, s.c2, 1), pt, *phi).ok());
  }
  SUBCASE("a non-fibrant member is reported") {
    ModelStructureData nf{&s.pair, class_isos(s.pair), class_all(s.pair), class_all(s.pair)};
    auto phi = principal_filter(s.poset, s.pi.pair_object(1, 0));
    auto rep = validate_model_filter(nf, pt, *phi);
    CHECK(has_failure(rep, "members-fibrant"));
  }
}

TEST_CASE("transfer along the trivial filter keeps the classes") {
  auto c = finset_category(2);
  auto poset = subterminal_poset(c);
  auto q = filter_quotient(c, *trivial_filter(poset));
  REQUIRE(q.has_value());
  ModelStructureData m{&c, class_all(c), class_all(c), class_isos(c)};
  auto t = transfer_model_structure(m, *q);
  CHECK_MESSAGE(t.report.ok(), t.report.first_failure());
  CHECK(t.model.F.size() == m.F.size());
  CHECK(t.model.C.size() == m.C.size());
  CHECK(t.model.W.size() == m.W.size());
}

TEST_CASE("transferred structure on the pair quotient") {
  PairSetup s;
  auto phi = principal_filter(s.poset, s.pi.pair_object(1, 0));
  auto q = filter_quotient(s.pair, *phi);
  REQUIRE(q.has_value());
  ModelStructureData m{&s.pair, class_all(s.pair), class_all(s.pair), class_isos(s.pair)};
  auto t = transfer_model_structure(m, *q);
  CHECK_MESSAGE(t.report.ok(), t.report.first_failure());

  SUBCASE("transferred weak equivalences are exactly the germ isomorphisms") {
    auto qisos = class_isos(q->quotient);
    for (int f = 0; f < q->quotient.num_arrows(); ++f)
      CHECK(t.model.W.contains(f) == qisos.contains(f));
  }
  SUBCASE("right properness holds on base and quotient") {
    CHECK(check_right_properness(m).ok());
    CHECK(check_right_properness(t.model).ok());
  }
}
