#pragma once

#include <map>
#include <memory>

#include "fq/fincat.hpp"

namespace fq {

/// A filter on a finite subterminal poset: non-empty, upward closed, downward
/// directed subset. Members are object ids of the underlying category, always
/// the poset's chosen class representatives. Finiteness gives a least member.
struct Filter {
  const SubterminalPoset* poset = nullptr;
  std::vector<int> members;
  int minimum = FinCategory::kNone;

  bool contains(int obj) const;
};

Report validate_filter(const SubterminalPoset& p, const std::vector<int>& members);
std::optional<Filter> make_filter(const SubterminalPoset& p, std::vector<int> members,
                                  Report* out_report = nullptr);

/// The filter {top}; requires the poset to have a greatest element.
std::optional<Filter> trivial_filter(const SubterminalPoset& p);
/// The up-set of u.
std::optional<Filter> principal_filter(const SubterminalPoset& p, int u);

/// A hom-class representative: an arrow f: X*U -> Y with U a filter member.
struct GermMorphism {
  int u = -1;    // subterminal (object id)
  int rep = -1;  // arrow X*U -> Y
};

/// The quotient category C_Phi: objects of C, arrows are germ classes of
/// arrows X*U -> Y over filter members U. Built by saturation: every
/// representative over every member is enumerated and classed, then each
/// class is named by its unique representative over the least member.
class FilterQuotient {
 public:
  const FinCategory* base = nullptr;
  Filter filter;
  int w0 = -1;  // least filter member
  FinCategory quotient;
  std::vector<int> canonical_rep;  // quotient arrow -> arrow X*W0 -> Y of base
  std::vector<int> germ_src, germ_cod;

  const ProductTable& products() const { return *products_; }

  /// f: X*U -> Y restricted to X*W along the unique arrow W -> U.
  int restrict_rep(int f, int x, int u, int w) const;

  /// Quotient arrow holding the class of (U, f: X*U -> Y); kNone if f is not
  /// an arrow of that form or U is not a member.
  int germ_of(int x, int u, int f) const;

  /// P_Phi on an arrow of the base.
  int project_arrow(int f) const;
  /// P_Phi as checkable functor data.
  FunctorData projection() const;

 private:
  friend std::optional<FilterQuotient> filter_quotient(const FinCategory&, const Filter&,
                                                       Report*);
  std::shared_ptr<ProductTable> products_;
  std::map<std::tuple<int, int, int>, int> class_of_;  // (x, u, f) -> quotient arrow
  std::vector<int> proj_arr_;                          // base arrow -> quotient arrow
};

/// Builds the quotient, reporting missing products, saturation structure and
/// well-definedness of composition. Returns nullopt when any check fails.
std::optional<FilterQuotient> filter_quotient(const FinCategory& c, const Filter& phi,
                                              Report* out_report = nullptr);

/// Decides germ equality of two representatives X*U -> Y, X*V -> Y by the
/// exhaustive existential over filter members W <= U, V.
bool germ_eq(const FinCategory& c, const ProductTable& pt, const Filter& phi, int x,
             const GermMorphism& a, const GermMorphism& b);

struct ProjectionCheckOptions {
  // cap on diagrams checked per shape; the default is exhaustive
  std::size_t max_diagrams_per_shape = static_cast<std::size_t>(-1);
};

/// Checks that P_Phi sends every existing (co)limit of the standard diagram
/// battery to a (co)limit, preserves monos, and sends existing exponentials
/// and the subobject classifier to the same structure in the quotient.
/// Diagrams whose (co)limit does not exist in the base are counted, not failed.
Report verify_projection(const FilterQuotient& q,
                         const ProjectionCheckOptions& opts = {});

/// For every germ f: checks is_mono in the quotient iff some representative
/// f': X*U -> Y has f'*U: X*U -> Y*U mono in the base.
Report germ_mono_characterization(const FilterQuotient& q);

}  // namespace fq
