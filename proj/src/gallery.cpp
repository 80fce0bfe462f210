#include "fq/workspace.hpp"

namespace fq {

namespace {

const char* kFinset2 = R"(workspace finset2

category base
  finset 2

filter top
  trivial base

filter wide
  principal base 0

class isos
  isos base
)";

const char* kSierpinskiArrow = R"(workspace sierpinski-arrow

category sierpinski
  objects b t
  arrow idb b b
  arrow idt t t
  arrow u b t
  identity b idb
  identity t idt
  compose idb idb idb
  compose idt idt idt
  compose u idb u
  compose idt u u

category sarrow
  arrow sierpinski

filter top
  trivial sarrow
)";

const char* kPairModel = R"(workspace pair-model

category base
  finset 2

category pair
  product base base

filter corner
  principal pair (1,empty)

model everything
  category pair
  cofibrations all
  fibrations all
  weak isos
)";

const char* kProductFrechetShadow = R"(workspace product-frechet-shadow

category base
  finset 2

filterproduct seqshadow
  base base
  copies 2
  principal {0}

family tails
  ctor sphere
  tail identity
)";

const char* kIntervalFragment = R"(workspace interval-fragment

shapes tuple
  builtin interval-fragment
)";

const char* kDn = R"(workspace dn

family halfspheres
  ctor sphere
  tail floorhalf
  offset 1

family flat
  ctor simplex
  tail constant
  value 1

family points
  ctor constant
  tail constant
  value 1
)";

const char* kSpheres = R"(workspace spheres

family linear
  ctor sphere
  tail identity

family shifted
  ctor sphere
  tail identity
  offset 2

family half
  ctor sphere
  tail floorhalf
  offset 1

family parity
  ctor sphere
  tail parity

family collapsed
  ctor sphere
  tail constant
  value 0

family fixed
  ctor sphere
  tail constant
  value 2

family vertex
  ctor simplex
  tail constant
  value 0

family edgeless
  ctor boundary
  tail constant
  value 1

family triple-point
  ctor constant
  tail constant
  value 3

family growing-simplex
  ctor simplex
  tail identity
  except 0 1
)";

const char* kGermMono = R"(workspace germ-mono

category base
  finset 1

category square
  product base base

filter corner
  principal square (1,empty)

filter top
  trivial square
)";

const char* kFinset2Model = R"(workspace finset2-model

category base
  finset 2

class w
  isos base

model everything
  category base
  cofibrations all
  fibrations all
  weak w

filter top
  trivial base
)";

}  // namespace

const std::vector<GalleryDoc>& gallery() {
  static const std::vector<GalleryDoc> docs = {
      {"finset2", "skeletal finite sets of size at most 2, the running base category", kFinset2},
      {"sierpinski-arrow", "the arrow category over the two-point order, declared from raw tables",
       kSierpinskiArrow},
      {"pair-model", "the everything/isos model structure on the square of finite sets, with the corner filter",
       kPairModel},
      {"product-frechet-shadow", "a two-index finite shadow of a sequence product, collapsing along a principal filter",
       kProductFrechetShadow},
      {"interval-fragment", "the built-in shapes tuple with its strict interval and filter triple",
       kIntervalFragment},
      {"dn", "the divergence-window families: half-speed spheres against a constant interval",
       kDn},
      {"spheres", "ten symbolic families probing the external-discreteness criterion", kSpheres},
      {"germ-mono", "the Boolean square with corner and trivial filters, for the germ-mono biconditional",
       kGermMono},
      {"finset2-model", "the everything/isos model structure on the base category itself",
       kFinset2Model},
  };
  return docs;
}

const GalleryDoc* find_gallery_doc(const std::string& name) {
  for (auto& d : gallery())
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace fq
