#pragma once

#include "fq/filtquot.hpp"

namespace fq {

/// A named arrow class, materialized as a membership vector.
struct MorphismClass {
  std::string name;
  std::vector<bool> member;
  bool contains(int f) const { return member[f]; }
  int size() const;
};

MorphismClass class_all(const FinCategory& c);
MorphismClass class_isos(const FinCategory& c);
MorphismClass class_identities(const FinCategory& c);
MorphismClass class_explicit(const FinCategory& c, const std::vector<int>& arrows,
                             const std::string& name);
/// Arrows of a binary product category whose given component (0 or 1) is an
/// iso of the factor category.
MorphismClass class_component_iso(const FinCategory& prod, const ProductCategoryInfo& info,
                                  const FinCategory& factor, int coord);
MorphismClass class_intersection(const MorphismClass& a, const MorphismClass& b);

/// Fibrations, cofibrations, weak equivalences on a finite category.
struct ModelStructureData {
  const FinCategory* cat = nullptr;
  MorphismClass F, C, W;
};

struct SquareLift {
  bool commutes = false;
  std::optional<int> lift;
};

/// Diagonal filler for the square (top, bottom) from i to p, by search.
SquareLift find_lift(const FinCategory& c, int i, int p, int top, int bottom);

/// True if i has the left lifting property against p on every commuting square.
bool lifts_against(const FinCategory& c, int i, int p);

/// Weak factorization system check: factorization through some object,
/// lifting of L against R, and the closure equalities L = llp(R), R = rlp(L).
Report verify_wfs(const FinCategory& c, const MorphismClass& L, const MorphismClass& R);

/// Both WFS pairs (C∩W, F), (C, F∩W) plus two-of-three for W.
Report verify_model_structure(const ModelStructureData& m);

/// Is f x U in S for every f in S and filter member U?
Report check_product_stability(const MorphismClass& s, const ProductTable& pt,
                               const Filter& phi);

/// Model filter conditions: members fibrant, C and W product stable.
Report validate_model_filter(const ModelStructureData& m, const ProductTable& pt,
                             const Filter& phi);

struct TransferredModel {
  ModelStructureData model;  // on q.quotient
  Report report;
};

/// The transferred classes S_Phi (a germ lies in S_Phi iff some representative
/// has f x U in S), verified as a model structure; also checks that the
/// projection preserves all three classes and re-derives the membership
/// biconditional arrow by arrow.
TransferredModel transfer_model_structure(const ModelStructureData& m,
                                          const FilterQuotient& q);

/// Every pullback of a W-arrow along an F-arrow (that exists in the fragment)
/// lands in W again.
Report check_right_properness(const ModelStructureData& m);

}  // namespace fq
