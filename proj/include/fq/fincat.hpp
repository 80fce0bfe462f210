#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fq/report.hpp"

namespace fq {

struct Arrow {
  std::string name;
  int dom = -1;
  int cod = -1;
};

/// A finite category given by an explicit composition table.
/// Instances are immutable after construction; all queries are const.
class FinCategory {
 public:
  static constexpr int kNone = -1;

  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;            // object -> identity arrow
  std::vector<std::vector<int>> table;  // table[g][f] = g∘f, kNone if not composable

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  bool composable(int g, int f) const { return arrows[f].cod == arrows[g].dom; }
  int compose(int g, int f) const { return table[g][f]; }

  const std::vector<int>& hom(int x, int y) const;
  int find_object(const std::string& n) const;
  int find_arrow(const std::string& n) const;

  bool is_identity(int f) const { return identity[arrows[f].dom] == f; }
  bool is_iso(int f) const;
  std::optional<int> inverse(int f) const;
  bool is_mono(int f) const;
  bool is_epi(int f) const;

  /// Objects x, y isomorphic?
  bool iso_objects(int x, int y) const;

  void finalize();  // builds hom index; call after filling the fields

  std::string obj_name(int x) const { return objects[x]; }
  std::string arr_name(int f) const { return arrows[f].name; }

 private:
  // hom_index_[x*num_objects()+y] lists arrows x -> y
  std::vector<std::vector<int>> hom_index_;
};

/// Unvalidated category description, as read from a document.
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  struct RawArrow {
    std::string name, dom, cod;
  };
  std::vector<RawArrow> arrows;
  std::vector<std::pair<std::string, std::string>> identities;  // (object, arrow)
  struct RawComposite {
    std::string g, f, gf;  // g∘f = gf
  };
  std::vector<RawComposite> composites;
};

/// Checks every law (references, identities, associativity, totality of
/// composition on composable pairs) and reports each violation with a witness.
Report validate_category(const RawCategory& raw);

/// Builds the category if validation passes.
std::optional<FinCategory> build_category(const RawCategory& raw, Report* out_report = nullptr);

RawCategory to_raw(const FinCategory& c);

// ---- built-in categories ----

/// Skeletal finite sets of cardinality <= k. Objects "0".."k"; arrows are all
/// functions, named like "f2:01" (domain 2, images 0,1).
FinCategory finset_category(int k);

/// Decodes a finset arrow name back into its image tuple.
std::vector<int> finset_arrow_images(const FinCategory& c, int f);
/// Arrow of finset_category(k) with given domain/codomain sizes and images.
int finset_arrow(const FinCategory& c, int dom_size, int cod_size,
                 const std::vector<int>& images);

struct ProductCategoryInfo {
  // arrow/object decompositions: component ids in the two factors
  std::vector<std::pair<int, int>> obj_parts;
  std::vector<std::pair<int, int>> arr_parts;
  int pair_object(int a, int b) const;
  int pair_arrow(int f, int g) const;

 private:
  friend FinCategory product_category(const FinCategory&, const FinCategory&,
                                      ProductCategoryInfo*);
  std::map<std::pair<int, int>, int> obj_lookup_, arr_lookup_;
};

FinCategory product_category(const FinCategory& a, const FinCategory& b,
                             ProductCategoryInfo* info = nullptr);

struct PowerCategoryInfo {
  std::vector<std::vector<int>> obj_parts, arr_parts;
  std::map<std::vector<int>, int> obj_lookup, arr_lookup;
};

/// n-fold power of c (the categorical product of n copies).
FinCategory power_category(const FinCategory& c, int n, PowerCategoryInfo* info = nullptr);

struct ArrowCategoryInfo {
  std::vector<int> obj_arrow;                     // object of C^-> -> arrow of C
  std::vector<std::pair<int, int>> arr_squares;   // arrow -> (top, bottom) in C
};

/// Arrow category C^->: objects are arrows of c, morphisms are commuting squares.
FinCategory arrow_category(const FinCategory& c, ArrowCategoryInfo* info = nullptr);

/// Full subcategory of Set^-> on an explicit list of functions between sets of
/// bounded size; each object is given as (dom_size, cod_size, images).
FinCategory setarrow_fragment(
    const std::vector<std::tuple<int, int, std::vector<int>>>& funcs, int max_set,
    ArrowCategoryInfo* info = nullptr);

FinCategory full_subcategory(const FinCategory& c, const std::vector<int>& objs,
                             std::vector<int>* obj_back = nullptr);

FinCategory opposite(const FinCategory& c);

// ---- functors and diagrams ----

struct FunctorData {
  const FinCategory* src = nullptr;
  const FinCategory* dst = nullptr;
  std::vector<int> obj_map;
  std::vector<int> arr_map;
};

/// Exhaustive functoriality check (identities + all composable pairs).
Report validate_functor(const FunctorData& f);
bool is_functor(const FunctorData& f);

FunctorData identity_functor(const FinCategory& c);
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);

/// A diagram is a functor out of a finite shape category.
using DiagramData = FunctorData;

struct Cone {
  int apex = -1;
  std::vector<int> legs;  // one per shape object
};

bool cone_commutes(const DiagramData& d, const Cone& c);
std::vector<Cone> all_cones(const DiagramData& d);
std::vector<Cone> all_cocones(const DiagramData& d);

/// Limiting cone verified universal by exhaustive search, or nullopt.
std::optional<Cone> limit(const DiagramData& d);
std::optional<Cone> colimit(const DiagramData& d);

/// True if `cand` is a limiting/colimiting cone for d (checked against all cones).
bool is_limit(const DiagramData& d, const Cone& cand);
bool is_colimit(const DiagramData& d, const Cone& cand);

// shape categories for the standard diagram battery
FinCategory shape_empty();
FinCategory shape_point();
FinCategory shape_discrete(int n);
FinCategory shape_arrow();          // a -> b
FinCategory shape_parallel_pair();  // a => b
FinCategory shape_span();           // b <- a -> c
FinCategory shape_cospan();         // b -> a <- c

DiagramData make_diagram(const FinCategory& shape, const FinCategory& target,
                         std::vector<int> obj_map, std::vector<int> arr_map);

// ---- products, exponentials, classifier ----

struct BinaryProduct {
  int obj = -1;
  int p1 = -1, p2 = -1;  // projections
};

/// Cache of chosen binary products of a fixed category.
class ProductTable {
 public:
  explicit ProductTable(const FinCategory& c) : cat_(&c) {}
  /// Chosen product of (x, y), or nullopt if none exists in the fragment.
  std::optional<BinaryProduct> product(int x, int y) const;
  /// Unique pairing <f,g>: A -> x*y, if the product exists.
  std::optional<int> pairing(int x, int y, int f, int g) const;
  /// f*g : x*y -> x'*y' for f: x->x', g: y->y'.
  std::optional<int> product_arrow(int f, int g) const;
  const FinCategory& cat() const { return *cat_; }

 private:
  const FinCategory* cat_;
  mutable std::map<std::pair<int, int>, std::optional<BinaryProduct>> cache_;
};

std::optional<int> terminal_object(const FinCategory& c);
std::optional<int> initial_object(const FinCategory& c);
/// Initial object all of whose incoming arrows are isomorphisms.
std::optional<int> strict_initial_object(const FinCategory& c);

struct Exponential {
  int obj = -1;  // Y^X
  int ev = -1;   // Y^X * X -> Y
};

/// Exponential Y^X with evaluation, verified against every object A for which
/// A*X exists in the fragment.
std::optional<Exponential> exponential(const ProductTable& pt, int x, int y);

/// True if cand is an exponential Y^X (same quantification as `exponential`).
bool is_exponential(const ProductTable& pt, int x, int y, const Exponential& cand);

/// Same check against an explicitly given product cone for cand.obj * x
/// (pex.obj must be the domain of cand.ev); products on the test side still
/// come from pt.
bool is_exponential(const ProductTable& pt, int x, int y, const Exponential& cand,
                    const BinaryProduct& pex);

/// True if cand is a product cone for (x, y), by exhaustive universality.
bool is_binary_product(const FinCategory& c, int x, int y, const BinaryProduct& cand);

struct SubobjectClassifier {
  int omega = -1;
  int truth = -1;  // 1 -> omega
};

std::optional<SubobjectClassifier> subobject_classifier(const FinCategory& c);

/// True if cand classifies every mono of c by a unique pullback square.
bool is_subobject_classifier(const FinCategory& c, const SubobjectClassifier& cand);

/// All monos into x, one arrow per subobject class (dedup up to domain iso
/// and equal image factorization).
std::vector<int> subobject_monos(const FinCategory& c, int x);

// ---- subterminal poset ----

struct SubterminalPoset {
  const FinCategory* cat = nullptr;
  std::vector<int> elems;              // representative objects, one per iso class
  std::vector<std::vector<bool>> leq;  // leq[i][j]: elems[i] <= elems[j]
  int index_of(int obj) const;         // -1 if obj is not a representative
  /// Representative of the iso class of a subterminal object (kNone if not subterminal).
  int representative(int obj) const;
};

SubterminalPoset subterminal_poset(const FinCategory& c);

// ---- equivalence search ----

/// Search for a fully faithful, essentially surjective functor c -> d.
std::optional<FunctorData> find_ff_eso_functor(const FinCategory& c, const FinCategory& d);

struct Equivalence {
  FunctorData fwd, bwd;
};

/// Brute-force equivalence witness: a ff+eso functor plus an explicitly
/// constructed quasi-inverse.
std::optional<Equivalence> find_equivalence(const FinCategory& c, const FinCategory& d);

/// Search for an isomorphism of categories (bijective on objects and arrows).
std::optional<FunctorData> find_category_isomorphism(const FinCategory& c, const FinCategory& d);

}  // namespace fq
