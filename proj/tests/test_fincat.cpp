#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fq/fincat.hpp"

using namespace fq;

namespace {

RawCategory terminal_raw() {
  RawCategory r;
  r.name = "point";
  r.objects = {"*"};
  r.arrows = {{"id", "*", "*"}};
  r.identities = {{"*", "id"}};
  r.composites = {{"id", "id", "id"}};
  return r;
}

RawCategory walking_arrow_raw() {
  RawCategory r;
  r.name = "walking-arrow";
  r.objects = {"a", "b"};
  r.arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"e", "a", "b"}};
  r.identities = {{"a", "ida"}, {"b", "idb"}};
  r.composites = {{"ida", "ida", "ida"}, {"idb", "idb", "idb"},
                  {"e", "ida", "e"},     {"idb", "e", "e"}};
  return r;
}

bool has_failure(const Report& rep, const std::string& check) {
  for (auto& it : rep.items)
    if (it.status == Status::Fail && it.check == check) return true;
  return false;
}

// independent composition oracle for finset arrows
std::vector<int> compose_images(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

bool injective(const std::vector<int>& img) {
  std::set<int> s(img.begin(), img.end());
  return s.size() == img.size();
}

bool surjective(const std::vector<int>& img, int cod) {
  std::set<int> s(img.begin(), img.end());
  return static_cast<int>(s.size()) == cod;
}

}  // namespace

TEST_CASE("category validation accepts the lawful examples") {
  CHECK(validate_category(terminal_raw()).ok());
  CHECK(validate_category(walking_arrow_raw()).ok());
  CHECK(build_category(walking_arrow_raw()).has_value());
}

TEST_CASE("category validation reports each broken law with a witness") {
  SUBCASE("missing composite") {
    auto r = walking_arrow_raw();
    r.composites.pop_back();
    auto rep = validate_category(r);
    CHECK(!rep.ok());
    CHECK(has_failure(rep, "composition-total"));
  }
  SUBCASE("identity law violated") {
    auto r = walking_arrow_raw();
    // e∘ida redirected: right identity law must flag arrow e
    r.composites[2] = {"e", "ida", "idb"};
    auto rep = validate_category(r);
    CHECK(!rep.ok());
    CHECK((has_failure(rep, "identity-law-right") || has_failure(rep, "composite-endpoints")));
  }
  SUBCASE("dangling object reference") {
    auto r = walking_arrow_raw();
    r.arrows.push_back({"bad", "a", "zzz"});
    CHECK(has_failure(validate_category(r), "arrow-codomain-declared"));
  }
  SUBCASE("identity not an endomorphism") {
    auto r = walking_arrow_raw();
    r.identities[1] = {"b", "e"};
    CHECK(has_failure(validate_category(r), "identity-endpoints"));
  }
  SUBCASE("associativity violated") {
    // monoid-like single object with a non-associative table
    RawCategory r;
    r.name = "broken";
    r.objects = {"x"};
    r.arrows = {{"id", "x", "x"}, {"s", "x", "x"}};
    r.identities = {{"x", "id"}};
    r.composites = {{"id", "id", "id"}, {"s", "id", "s"}, {"id", "s", "s"}, {"s", "s", "id"}};
    // s∘s = id makes (s∘s)∘s = s and s∘(s∘s) = s, fine; break it instead:
    r.arrows.push_back({"t", "x", "x"});
    r.composites = {{"id", "id", "id"}, {"s", "id", "s"}, {"id", "s", "s"},
                    {"t", "id", "t"},   {"id", "t", "t"}, {"s", "s", "t"},
                    {"s", "t", "id"},   {"t", "s", "s"},  {"t", "t", "t"}};
    auto rep = validate_category(r);
    CHECK(!rep.ok());
    CHECK(has_failure(rep, "associativity"));
  }
}

TEST_CASE("skeletal finite sets: counts and hom sizes") {
  auto c2 = finset_category(2);
  CHECK(c2.num_objects() == 3);
  CHECK(c2.num_arrows() == 11);
  auto c3 = finset_category(3);
  CHECK(c3.num_arrows() == 60);
  auto c4 = finset_category(4);
  CHECK(c4.num_arrows() == 499);
  // |hom(m, n)| = n^m with 0^0 = 1
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      int expect = 1;
      for (int i = 0; i < m; ++i) expect *= n;
      CHECK(static_cast<int>(c3.hom(m, n).size()) == expect);
    }
  CHECK(validate_category(to_raw(c2)).ok());
}

TEST_CASE("finset composition agrees with function composition") {
  auto c = finset_category(3);
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f = 0; f < c.num_arrows(); ++f) {
      if (!c.composable(g, f)) continue;
      auto expect = compose_images(finset_arrow_images(c, g), finset_arrow_images(c, f));
      CHECK(finset_arrow_images(c, c.compose(g, f)) == expect);
    }
}

TEST_CASE("mono iff injective, epi iff surjective, iso iff bijective in finite sets") {
  auto c = finset_category(3);
  for (int f = 0; f < c.num_arrows(); ++f) {
    auto img = finset_arrow_images(c, f);
    int cod = c.arrows[f].cod;
    CHECK(c.is_mono(f) == injective(img));
    CHECK(c.is_epi(f) == surjective(img, cod));
    CHECK(c.is_iso(f) == (injective(img) && surjective(img, cod)));
    if (auto inv = c.inverse(f)) {
      CHECK(c.compose(*inv, f) == c.identity[c.arrows[f].dom]);
      CHECK(c.compose(f, *inv) == c.identity[cod]);
    }
  }
}

TEST_CASE("product and power categories") {
  auto c2 = finset_category(2);
  ProductCategoryInfo pi;
  auto p = product_category(c2, c2, &pi);
  CHECK(p.num_objects() == 9);
  CHECK(p.num_arrows() == 121);
  CHECK(validate_category(to_raw(p)).ok());
  // componentwise composition
  for (int f = 0; f < 20; ++f)
    for (int g = 0; g < p.num_arrows(); ++g) {
      if (!p.composable(g, f)) continue;
      auto [g1, g2] = pi.arr_parts[g];
      auto [f1, f2] = pi.arr_parts[f];
      CHECK(p.compose(g, f) == pi.pair_arrow(c2.compose(g1, f1), c2.compose(g2, f2)));
    }

  auto c1 = finset_category(1);
  auto sq = power_category(c1, 2);
  CHECK(sq.num_objects() == 4);
  CHECK(validate_category(to_raw(sq)).ok());
  auto bin = product_category(c1, c1);
  CHECK(find_category_isomorphism(sq, bin).has_value());
}

TEST_CASE("arrow category of finite sets of size <= 1") {
  auto c1 = finset_category(1);
  ArrowCategoryInfo ai;
  auto ac = arrow_category(c1, &ai);
  // objects: id0, id1, the unique 0 -> 1
  CHECK(ac.num_objects() == 3);
  CHECK(validate_category(to_raw(ac)).ok());
  for (int s = 0; s < ac.num_arrows(); ++s) {
    auto [top, bot] = ai.arr_squares[s];
    int f = ai.obj_arrow[ac.arrows[s].dom], g = ai.obj_arrow[ac.arrows[s].cod];
    CHECK(c1.compose(g, top) == c1.compose(bot, f));
  }
}

TEST_CASE("full subcategory and opposite round-trip") {
  auto c2 = finset_category(2);
  std::vector<int> back;
  auto s = full_subcategory(c2, {0, 1}, &back);
  CHECK(s.num_objects() == 2);
  CHECK(validate_category(to_raw(s)).ok());
  auto op = opposite(c2);
  CHECK(validate_category(to_raw(op)).ok());
  CHECK(find_category_isomorphism(opposite(op), c2).has_value());
}

TEST_CASE("functor validation") {
  auto c2 = finset_category(2);
  auto idf = identity_functor(c2);
  CHECK(is_functor(idf));
  CHECK(is_functor(compose_functors(idf, idf)));
  auto broken = idf;
  // swap two parallel arrows: composition law must break
  int a = finset_arrow(c2, 1, 2, {0}), b = finset_arrow(c2, 1, 2, {1});
  std::swap(broken.arr_map[a], broken.arr_map[b]);
  CHECK(!is_functor(broken));
}

TEST_CASE("terminal, initial, strict initial in finite sets") {
  auto c = finset_category(3);
  auto t = terminal_object(c);
  REQUIRE(t.has_value());
  CHECK(c.objects[*t] == "1");
  auto i = initial_object(c);
  REQUIRE(i.has_value());
  CHECK(c.objects[*i] == "0");
  CHECK(strict_initial_object(c) == i);
}

TEST_CASE("limits of the standard diagram battery in finite sets") {
  auto c = finset_category(4);
  SUBCASE("empty limit is the terminal object") {
    auto sh = shape_empty();
    auto d = make_diagram(sh, c, {}, {});
    auto l = limit(d);
    REQUIRE(l.has_value());
    CHECK(c.objects[l->apex] == "1");
    auto cl = colimit(d);
    REQUIRE(cl.has_value());
    CHECK(c.objects[cl->apex] == "0");
  }
  SUBCASE("discrete limit is the product, colimit the coproduct") {
    auto sh = shape_discrete(2);
    auto d = make_diagram(sh, c, {2, 2}, {c.identity[2], c.identity[2]});
    auto l = limit(d);
    REQUIRE(l.has_value());
    CHECK(c.objects[l->apex] == "4");
    auto cl = colimit(d);
    REQUIRE(cl.has_value());
    CHECK(c.objects[cl->apex] == "4");
    auto d12 = make_diagram(sh, c, {1, 2}, {c.identity[1], c.identity[2]});
    auto cl12 = colimit(d12);
    REQUIRE(cl12.has_value());
    CHECK(c.objects[cl12->apex] == "3");
  }
  SUBCASE("arrow diagram limit is the domain") {
    auto sh = shape_arrow();
    int e = finset_arrow(c, 3, 2, {0, 0, 1});
    auto d = make_diagram(sh, c, {3, 2}, {c.identity[3], c.identity[2], e});
    auto l = limit(d);
    REQUIRE(l.has_value());
    CHECK(c.iso_objects(l->apex, 3));
    Cone direct{3, {c.identity[3], e}};
    CHECK(is_limit(d, direct));
    Cone wrong{2, {finset_arrow(c, 2, 3, {0, 1}), c.identity[2]}};
    CHECK(!is_limit(d, wrong));
  }
  SUBCASE("equalizer of a parallel pair") {
    auto sh = shape_parallel_pair();
    int f = finset_arrow(c, 2, 2, {0, 1});
    int g = finset_arrow(c, 2, 2, {0, 0});
    auto d = make_diagram(sh, c, {2, 2}, {c.identity[2], c.identity[2], f, g});
    auto l = limit(d);
    REQUIRE(l.has_value());
    // functions agree exactly on element 0
    CHECK(c.objects[l->apex] == "1");
    auto cl = colimit(d);
    REQUIRE(cl.has_value());
    CHECK(c.objects[cl->apex] == "1");  // coequalizer glues 0 and 1
  }
  SUBCASE("pullback over a cospan") {
    auto sh = shape_cospan();
    int l1 = finset_arrow(c, 1, 2, {0});
    int r1 = finset_arrow(c, 2, 2, {0, 0});
    auto d = make_diagram(sh, c, {2, 1, 2},
                          {c.identity[2], c.identity[1], c.identity[2], l1, r1});
    auto lim = limit(d);
    REQUIRE(lim.has_value());
    CHECK(c.objects[lim->apex] == "2");  // fiber of r1 over 0 is all of 2
  }
  SUBCASE("pushout of a span") {
    auto sh = shape_span();
    int l1 = finset_arrow(c, 1, 2, {0});
    int r1 = finset_arrow(c, 1, 1, {0});
    auto d = make_diagram(sh, c, {1, 2, 1},
                          {c.identity[1], c.identity[2], c.identity[1], l1, r1});
    auto cl = colimit(d);
    REQUIRE(cl.has_value());
    CHECK(c.objects[cl->apex] == "2");  // 2 +_1 1
  }
}

TEST_CASE("product table with pairings and arrow products") {
  auto c = finset_category(4);
  ProductTable pt(c);
  auto p22 = pt.product(2, 2);
  REQUIRE(p22.has_value());
  CHECK(c.objects[p22->obj] == "4");
  // pairing of the two distinct points 1 -> 2
  int x = finset_arrow(c, 1, 2, {0}), y = finset_arrow(c, 1, 2, {1});
  auto pr = pt.pairing(2, 2, x, y);
  REQUIRE(pr.has_value());
  CHECK(c.compose(p22->p1, *pr) == x);
  CHECK(c.compose(p22->p2, *pr) == y);
  auto pa = pt.product_arrow(x, y);
  REQUIRE(pa.has_value());
  CHECK(c.arrows[*pa].cod == p22->obj);
  // no product of 3 and 2 inside the fragment bounded at 4
  CHECK(!pt.product(3, 2).has_value());
}

TEST_CASE("exponentials where the fragment contains them") {
  auto c = finset_category(4);
  ProductTable pt(c);
  // 2^2 = 4 but its evaluation map would live on 4*2 = 8, outside the fragment
  CHECK(!exponential(pt, 2, 2).has_value());
  auto e12 = exponential(pt, 1, 2);
  REQUIRE(e12.has_value());
  CHECK(c.iso_objects(e12->obj, 2));
  auto e02 = exponential(pt, 0, 2);
  REQUIRE(e02.has_value());
  CHECK(c.iso_objects(e02->obj, 1));
}

TEST_CASE("exponentials in a Boolean algebra poset are implications") {
  // the chain 0 <= 1 squared, as a category: products are meets and the
  // exponential b^a is (not a) or b
  auto two = finset_category(1);
  ProductCategoryInfo pi;
  auto b4 = product_category(two, two, &pi);
  ProductTable pt(b4);
  int o00 = pi.pair_object(0, 0), o01 = pi.pair_object(0, 1);
  int o10 = pi.pair_object(1, 0), o11 = pi.pair_object(1, 1);
  auto m = pt.product(o01, o10);
  REQUIRE(m.has_value());
  CHECK(m->obj == o00);
  auto imp = exponential(pt, o10, o01);
  REQUIRE(imp.has_value());
  CHECK(imp->obj == o01);
  auto imp2 = exponential(pt, o11, o00);
  REQUIRE(imp2.has_value());
  CHECK(imp2->obj == o00);
  auto imp3 = exponential(pt, o00, o10);
  REQUIRE(imp3.has_value());
  CHECK(imp3->obj == o11);
}

TEST_CASE("subobjects and the two-valued classifier") {
  auto c = finset_category(2);
  CHECK(subobject_monos(c, 2).size() == 4);  // empty, two singletons, all
  CHECK(subobject_monos(c, 1).size() == 2);
  auto sc = subobject_classifier(c);
  REQUIRE(sc.has_value());
  CHECK(c.objects[sc->omega] == "2");
  CHECK(c.is_mono(sc->truth));
}

TEST_CASE("three-stage classifier in a fragment of the arrow category of sets") {
  // objects are functions; [1 -> 1] is terminal and the classifying object is
  // the 3 -> 2 map collapsing the first two elements
  std::vector<std::tuple<int, int, std::vector<int>>> funcs = {
      {0, 0, {}}, {0, 1, {}}, {1, 1, {0}}, {1, 2, {0}}, {2, 2, {0, 1}}, {3, 2, {0, 0, 1}}};
  auto frag = setarrow_fragment(funcs, 3);
  CHECK(validate_category(to_raw(frag)).ok());
  auto t = terminal_object(frag);
  REQUIRE(t.has_value());
  CHECK(frag.objects[*t] == "[f1to1:0]");
  auto sc = subobject_classifier(frag);
  REQUIRE(sc.has_value());
  CHECK(frag.objects[sc->omega] == "[f3to2:001]");
}

TEST_CASE("subterminal posets") {
  SUBCASE("finite sets: the chain 0 <= 1") {
    auto c = finset_category(2);
    auto p = subterminal_poset(c);
    REQUIRE(p.elems.size() == 2);
    int i0 = p.index_of(0), i1 = p.index_of(1);
    REQUIRE(i0 >= 0);
    REQUIRE(i1 >= 0);
    CHECK(p.leq[i0][i1]);
    CHECK(!p.leq[i1][i0]);
    CHECK(p.representative(2) == FinCategory::kNone);
  }
  SUBCASE("pair category: the product order on four elements") {
    auto c2 = finset_category(2);
    auto p = product_category(c2, c2);
    auto sp = subterminal_poset(p);
    CHECK(sp.elems.size() == 4);
    int count_leq = 0;
    for (auto& row : sp.leq)
      for (bool b : row) count_leq += b;
    CHECK(count_leq == 9);  // 2-chain squared
  }
  SUBCASE("arrow category: a three-element chain") {
    auto c2 = finset_category(2);
    auto ac = arrow_category(c2);
    auto sp = subterminal_poset(ac);
    REQUIRE(sp.elems.size() == 3);
    std::set<std::string> names;
    for (int e : sp.elems) names.insert(ac.objects[e]);
    CHECK(names == std::set<std::string>{"[f0to0:-]", "[f0to1:-]", "[f1to1:0]"});
  }
}

TEST_CASE("equivalence search") {
  // indiscrete category on two objects is equivalent, not isomorphic, to a point
  RawCategory r;
  r.name = "indiscrete2";
  r.objects = {"x", "y"};
  r.arrows = {{"xx", "x", "x"}, {"yy", "y", "y"}, {"xy", "x", "y"}, {"yx", "y", "x"}};
  r.identities = {{"x", "xx"}, {"y", "yy"}};
  for (auto g : {"xx", "yy", "xy", "yx"})
    for (auto f : {"xx", "yy", "xy", "yx"}) {
      RawCategory::RawArrow gf;
      // unique arrow between any two objects: composite determined by endpoints
      std::string gn = g, fn = f;
      if (fn[1] != gn[0]) continue;
      r.composites.push_back({gn, fn, std::string(1, fn[0]) + std::string(1, gn[1])});
    }
  auto ind = build_category(r);
  REQUIRE(ind.has_value());
  auto pointc = *build_category(terminal_raw());

  auto eq = find_equivalence(*ind, pointc);
  REQUIRE(eq.has_value());
  CHECK(is_functor(eq->fwd));
  CHECK(is_functor(eq->bwd));
  auto eq2 = find_equivalence(pointc, *ind);
  CHECK(eq2.has_value());
  CHECK(!find_category_isomorphism(*ind, pointc).has_value());

  auto c2 = finset_category(2);
  auto self = find_category_isomorphism(c2, c2);
  REQUIRE(self.has_value());
  CHECK(is_functor(*self));
}
