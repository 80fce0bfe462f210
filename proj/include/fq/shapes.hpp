#pragma once

#include "fq/model.hpp"

namespace fq {

// ---- fibered categories ----

/// A functor presented as a Grothendieck fibration candidate: total -> base.
struct FiberedCategory {
  const FinCategory* base = nullptr;
  const FinCategory* total = nullptr;
  FunctorData proj;
};

/// True if the arrow is cartesian over its projection (unique fillers for
/// every factorization of the projected composite).
bool is_cartesian(const FiberedCategory& p, int arrow);

/// A cartesian arrow into e over f, found by search.
std::optional<int> cartesian_lift(const FiberedCategory& p, int f, int e);

/// Domain of the chosen cartesian lift: the reindexing f*(elem).
std::optional<int> reindex(const FiberedCategory& p, int f, int elem);

/// The fiber over one base object, with its vertical order and (partial)
/// lattice operations. join/meet entries are -1 where no bound exists.
struct FiberLattice {
  int base_obj = -1;
  std::vector<int> elems;  // total-category objects over base_obj
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> join, meet;  // indices into elems
  int top = -1, bottom = -1;                 // indices into elems
  int index_of(int obj) const;
  bool equiv(int i, int j) const { return leq[i][j] && leq[j][i]; }
};

FiberLattice fiber_lattice(const FiberedCategory& p, int x);

/// Fibration + fiber-lattice validation: functoriality of the projection,
/// cartesian lifts for every (arrow, object-over-codomain) pair, and each
/// fiber a lattice (poset with total join/meet satisfying absorption).
Report validate_shape_theory(const FiberedCategory& p);

// ---- the category of monomorphisms ----

struct MonoCategoryInfo {
  std::vector<int> obj_mono;                     // object -> mono arrow of v
  std::vector<std::pair<int, int>> arr_squares;  // arrow -> (top, bottom) in v
  std::map<int, int> obj_lookup;                 // mono arrow of v -> object
  std::map<std::tuple<int, int, int>, int> arr_lookup;  // (dom obj, cod obj, bottom)
};

/// Arrows-as-objects category of the monomorphisms of v; morphisms are
/// commuting squares. With canonical_only, one mono per subobject class.
FinCategory mono_category(const FinCategory& v, MonoCategoryInfo* info = nullptr,
                          bool canonical_only = false);

/// The codomain projection Mono(v) -> v.
FunctorData mono_projection(const FinCategory& mono, const MonoCategoryInfo& info,
                            const FinCategory& v);

// ---- strict intervals ----

struct LatticeTerm {
  enum class Kind { Top, Bottom, Gen, Meet, Join, Reindex };
  Kind kind = Kind::Top;
  std::string gen;               // Kind::Gen: generator name
  std::string arrow;             // Kind::Reindex: base-arrow name
  std::vector<LatticeTerm> args;
};

LatticeTerm lt_top();
LatticeTerm lt_bottom();
LatticeTerm lt_gen(std::string name);
LatticeTerm lt_meet(LatticeTerm a, LatticeTerm b);
LatticeTerm lt_join(LatticeTerm a, LatticeTerm b);
LatticeTerm lt_reindex(std::string arrow, LatticeTerm t);

struct IntervalAxiom {
  std::string name;
  int fiber = -1;  // base object the equation lives over
  LatticeTerm lhs, rhs;
};

struct IntervalData {
  int interval = -1;            // the object carrying the two points
  int point0 = -1, point1 = -1; // arrows terminal -> interval
  std::map<std::string, std::pair<int, int>> generators;  // name -> (fiber, elem)
  std::vector<IntervalAxiom> axioms;
  std::string provenance;  // noted in reports when non-empty
};

/// Distinctness of the two points plus evaluation of every axiom in the
/// fiber lattices of t.
Report check_strict_interval(const FiberedCategory& t, const IntervalData& iv);

// ---- the full tuple ----

struct ShapeModel {
  FunctorData m0;  // theory base -> v
  FunctorData m1;  // theory total -> mono total
};

struct ShapesTuple {
  ModelStructureData m;
  const FinCategory* v = nullptr;
  FiberedCategory theory;  // T1 -> T0
  FiberedCategory mono;    // Mono(v) -> v
  ShapeModel model;
  FunctorData omega;       // v -> m.cat
  IntervalData interval;
};

/// All four clauses: the model category (with topos witnesses, right
/// properness, cofibrations mono), the shape model (commuting square,
/// product/cartesian/lattice preservation), coherence of omega (limits,
/// regular epis, unions), and stability of acyclic cofibrations under
/// products with omega images.
Report validate_shapes_tuple(const ShapesTuple& t);

// ---- quotients ----

/// Both filter quotients of a fibration: the base at phi, the total at the
/// filter generated by the fiberwise top elements over phi's members, plus
/// the induced projection, re-verified as a fibration.
struct FibrationQuotient {
  SubterminalPoset total_poset;
  Filter total_filter;
  FilterQuotient base_q, total_q;
  FunctorData proj_q;
  Report report;
};

std::unique_ptr<FibrationQuotient> fibration_quotient(const FiberedCategory& p,
                                                      const Filter& phi,
                                                      Report* out_report = nullptr);

/// The functor induced on filter quotients by f, built germ by germ and
/// verified (functoriality plus commutation with both projections).
std::optional<FunctorData> induced_functor(const FunctorData& f, const FilterQuotient& qs,
                                           const FilterQuotient& qd,
                                           Report* out_report = nullptr);

/// Checks that the functor induced by a regular functor is regular on the
/// quotients: finite limits, epimorphisms and finite subobject unions are
/// preserved, exhaustively over both quotient categories.
Report regular_quotient_check(const FunctorData& f, const FilterQuotient& qv,
                              const FilterQuotient& qw);

struct ShapesFilterTriple {
  const Filter* phi_t = nullptr;  // on the theory base
  const Filter* phi_v = nullptr;  // on v
  const Filter* phi_m = nullptr;  // on m.cat
};

/// The quotient tuple and every verification stage: triple compatibility,
/// all component quotients, induced functors, transferred model structure,
/// then full revalidation of the tuple and its interval.
struct QuotientShapes {
  std::optional<FilterQuotient> m_q;
  std::unique_ptr<FibrationQuotient> theory_q, mono_q;  // mono_q.base_q quotients v
  TransferredModel transferred;
  std::optional<FunctorData> m0_q, m1_q, omega_q;
  IntervalData interval_q;
  ShapesTuple tuple;
  bool complete = false;  // tuple is fully assembled
  Report report;
};

std::unique_ptr<QuotientShapes> quotient_shapes_tuple(const ShapesTuple& t,
                                                      const ShapesFilterTriple& tr);

// ---- built-in instance ----

/// The interval-fragment tuple: finite sets of size <= 2 as theory base and
/// coherent category, the canonical-subobject fibration as theory total, the
/// pair category as model category with trivial cofibrations, and the
/// coordinate filter triple.
struct BuiltinShapes {
  FinCategory v;      // doubles as the theory base
  FinCategory m_cat;  // v x v
  ProductCategoryInfo m_info;
  FinCategory t1;     // canonical subobject fibration total
  MonoCategoryInfo t1_info;
  FinCategory mono_v;
  MonoCategoryInfo mono_info;
  SubterminalPoset v_poset, m_poset;
  Filter phi_t, phi_v, phi_m;
  ShapesTuple tuple;
  ShapesFilterTriple triple;
};

std::unique_ptr<BuiltinShapes> builtin_interval_fragment();

}  // namespace fq
