#pragma once

#include <memory>

#include "fq/filtquot.hpp"

namespace fq {

/// A filter of subsets of {0..index_size-1}; subsets are bitmasks.
struct SubsetFilter {
  int index_size = 0;
  std::vector<unsigned> members;
};

Report validate_subset_filter(const SubsetFilter& f);
SubsetFilter principal_subset_filter(int index_size, unsigned s);

/// The filter product of index_size copies of a category: the filter quotient
/// of the power category at the subterminals U_S (terminal component on S,
/// strict initial off S). Heap-allocated so the internal cross references
/// stay valid.
struct FilterProduct {
  FinCategory power;
  PowerCategoryInfo info;
  SubterminalPoset poset;
  Filter filter;
  std::vector<int> u_objects;  // subset mask -> object of `power`
  FilterQuotient quotient;
};

std::unique_ptr<FilterProduct> finite_filter_product(const FinCategory& c, int index_size,
                                                     const SubsetFilter& phi,
                                                     Report* out_report = nullptr);

// ---- symbolic sequences over the cofinite filter on the naturals ----

/// A sequence given by finitely many exceptions over a closed tail family.
/// The tail value at n is: Constant -> value; Identity -> n + offset;
/// FloorHalf -> n/2 + offset; Parity -> n%2 + offset. `ctor` tags the value
/// universe (empty for bare naturals; e.g. a named object constructor applied
/// to the numeric output). Unknown ctor names make comparisons undecidable.
struct EventualSequence {
  enum class Tail { Constant, Identity, FloorHalf, Parity };
  Tail tail = Tail::Constant;
  long value = 0;   // the constant, for Tail::Constant
  long offset = 0;  // additive shift, for the other tails
  std::string ctor;
  std::map<long, long> exceptions;
};

/// Concrete numeric value at index n (exceptions override the tail).
long eval_sequence(const EventualSequence& s, long n);

enum class Verdict { Equal, NotEqual, Undecidable };

/// Decides whether two sequences agree on a cofinite set. Exact on the
/// supported tail family; never guesses outside it.
Verdict frechet_germ_eq(const EventualSequence& s, const EventualSequence& t);

/// Known constructor tags (comparisons with any other tag are undecidable).
bool known_sequence_ctor(const std::string& ctor);

struct GermPartition {
  std::vector<std::vector<int>> classes;  // indices into the sample
  std::vector<bool> undecidable;          // flagged singleton classes
};

/// Partition of a sample by frechet_germ_eq; undecidable comparisons leave
/// the affected sequences in flagged singleton classes.
GermPartition internal_naturals(const std::vector<EventualSequence>& sample);

/// k pairwise inequivalent germs (constants), for cardinality demonstrations.
std::vector<EventualSequence> distinct_germ_family(int k);

}  // namespace fq
