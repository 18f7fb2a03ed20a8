#pragma once
#include "nullplane/algdef.hpp"
#include "nullplane/morphism.hpp"

#include <memory>

namespace nullplane {

// Free-algebra expansion of parsed expressions at truncation order K: series
// functions of generators become sums of generator powers with ZSeries
// coefficients.  No normal ordering happens here.
AlgebraElement expand_expr(const Expr& e, int K);
TensorElement expand_tensor_expr(const TensorExpr& e, int K, int rank = 2);

// A presentation's structures expanded at one truncation order, ready for
// defect computations.
struct HopfStructures {
  const HopfPresentation* pres;
  int K;
  BracketTable table;
  CoprodMap coproduct;
  CounitMap counit;
  AlgMap antipode;
  std::unique_ptr<NormalOrderer> orderer;

  NormalOrderer& no() { return *orderer; }
  AlgebraElement gen(int id) const {
    return AlgebraElement::generator(K, static_cast<uint8_t>(id));
  }
};

HopfStructures build_structures(const HopfPresentation& p, int K);

// FNV-1a hash of the canonical serialization; pinned in reports.
uint64_t presentation_hash(const HopfPresentation& p);

} // namespace nullplane
