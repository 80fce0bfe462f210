#pragma once

#include "fq/filterprod.hpp"

namespace fq {

// ---- truncated simplicial sets ----

/// A d-truncated simplicial set with finite levels, given by level sizes and
/// explicit face/degeneracy tables.
struct TruncatedSimplicialObject {
  int d = 0;
  std::vector<int> level;                            // sizes of levels 0..d
  std::vector<std::vector<std::vector<int>>> face;   // face[m][i]: level m -> m-1, 1 <= m <= d
  std::vector<std::vector<std::vector<int>>> degen;  // degen[m][j]: level m -> m+1, 0 <= m < d
  bool empty() const { return level.empty() || level[0] == 0; }
};

/// Well-formedness plus every simplicial identity at every level <= d.
Report validate_simplicial(const TruncatedSimplicialObject& x);

TruncatedSimplicialObject sset_simplex(int n, int d);
TruncatedSimplicialObject sset_boundary(int n, int d);
/// The sphere built directly: one collapsed vertex plus the surjective
/// simplices. sset_sphere(0, d) is the point (quotient by the empty boundary).
TruncatedSimplicialObject sset_sphere(int n, int d);
TruncatedSimplicialObject sset_constant(int size, int d);
/// name in {simplex, boundary, sphere, constant}; constant takes the set size.
TruncatedSimplicialObject sset_build(const std::string& name, long param, int d);

TruncatedSimplicialObject sset_terminal(int d);
TruncatedSimplicialObject sset_empty(int d);
TruncatedSimplicialObject sset_product(const TruncatedSimplicialObject& a,
                                       const TruncatedSimplicialObject& b);
TruncatedSimplicialObject sset_coproduct(const TruncatedSimplicialObject& a,
                                         const TruncatedSimplicialObject& b);
/// The subterminal part: empty if x is empty, otherwise terminal.
TruncatedSimplicialObject tau_minus_one(const TruncatedSimplicialObject& x);

/// Collapse a subcomplex (levelwise mask, closed under faces and
/// degeneracies) to a single point; the collapse of the empty subcomplex
/// adjoins a disjoint point.
TruncatedSimplicialObject sset_collapse(const TruncatedSimplicialObject& x,
                                        const std::vector<std::vector<bool>>& sub);
/// The sphere as an actual quotient of the simplex by its boundary, for
/// n >= 1; independent of sset_sphere and used to cross-check it.
TruncatedSimplicialObject sset_sphere_by_quotient(int n, int d);

/// True if every positive-level cell is degenerate.
bool sset_discrete(const TruncatedSimplicialObject& x);

// ---- maps and subcomplexes ----

/// A simplicial map as levelwise functions.
using SimplicialMap = std::vector<std::vector<int>>;

/// All simplicial maps x -> y, by backtracking over nondegenerate cells.
std::vector<SimplicialMap> hom_set(const TruncatedSimplicialObject& x,
                                   const TruncatedSimplicialObject& y);

bool sset_iso(const TruncatedSimplicialObject& x, const TruncatedSimplicialObject& y);

/// Levelwise masks of every subcomplex of x. Requires a small number of
/// nondegenerate cells (the enumeration runs over their subsets).
std::vector<std::vector<std::vector<bool>>> subcomplexes(const TruncatedSimplicialObject& x);

// ---- ambient contexts and the unique-arrow conditions ----

/// A finite filter power of the truncated simplicial sets: `copies`
/// components, with hom sets taken as germs over the filter, i.e. products
/// over the minimum member `support`.
struct SsetContext {
  int copies = 1;
  int d = 2;
  std::vector<int> support = {0};
};

using FamilyObject = std::vector<TruncatedSimplicialObject>;

/// All 2^copies componentwise-subterminal families.
std::vector<FamilyObject> context_subterminals(const SsetContext& ctx);

/// True if u is empty on every support component (germ-initial); the
/// unique-arrow conditions are vacuously unsatisfiable there, since the germ
/// hom set out of it is a singleton.
bool germ_initial(const SsetContext& ctx, const FamilyObject& u);

/// The componentwise product of the 1-simplex with u.
FamilyObject interval_object(const SsetContext& ctx, const FamilyObject& u);

bool family_iso(const SsetContext& ctx, const FamilyObject& a, const FamilyObject& b);

/// The six conditions characterizing the interval on a subterminal, each as
/// its truncated shadow: plain levels for 0-truncation, emptiness agreement
/// for the (-1)-truncation, a two-element germ hom set, non-invertibility of
/// the induced endpoint map, subobjects bounded by the endpoints, and no
/// subobject strictly between the endpoints and the candidate.
Report unique_arrow_check(const SsetContext& ctx, const FamilyObject& u, const FamilyObject& a);

struct UniqueArrowSearch {
  long examined = 0;
  long passing = 0;
  long alternatives = 0;  // passing candidates not isomorphic to the interval
  Report report;
};

/// Exhaustive search over candidates with at most max_cells nondegenerate
/// cells (truncation 2, one nonempty support component) for objects passing
/// all six conditions; reports whether every one is isomorphic to the
/// interval on u.
UniqueArrowSearch unique_arrow_search(const SsetContext& ctx, const FamilyObject& u,
                                      int max_cells);

// ---- external discreteness ----

/// Locality with respect to the representables times the subterminal part,
/// for all n <= x.d; cross-checked against locality with respect to the
/// 1-simplex powers, with agreement recorded in the report.
bool is_externally_discrete(const TruncatedSimplicialObject& x, Report* out = nullptr);

// ---- symbolic families over the cofinite filter ----

/// A sequence of builder applications: the EventualSequence supplies the
/// numeric parameter, its ctor field names the builder.
struct SymbolicFamily {
  EventualSequence seq;
};

bool known_family_ctor(const std::string& ctor);

/// The concrete member at index n, at truncation d.
TruncatedSimplicialObject family_value(const SymbolicFamily& f, long n, int d);

enum class Decision { Yes, No, Undecidable };

/// Whether {n : the member at truncation d is discrete} is cofinite, decided
/// symbolically from the tail family. Unknown builders are undecidable.
Decision frechet_externally_discrete(const SymbolicFamily& f, int d);

// ---- the divergence window ----

struct DnResult {
  std::vector<long> d;   // indices 0..window
  long bound = 0;        // the divergence bound that was tested
  bool diverges = false; // d_n >= bound from the window midpoint onward
  Report report;         // factorization checks; blocked indices where d_n = 0
};

/// d_n = n when the member is discrete, otherwise one less than the first
/// level where the iterated degeneracy from level 0 stops being onto. For
/// d_n >= 1, exhaustively verifies every map from the (d_n - 1)-sphere into
/// the member factors through the terminal object. bound < 0 selects
/// max(1, window / 4).
DnResult dn_sequence(const SymbolicFamily& f, int window, long bound = -1);

}  // namespace fq
