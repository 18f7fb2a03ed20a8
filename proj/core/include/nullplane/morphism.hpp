#pragma once
#include "nullplane/element.hpp"
#include "nullplane/normal_order.hpp"

namespace nullplane {

// Generator images of an algebra map, extended multiplicatively over words
// (with reversal when anti is set).  Image types: AlgebraElement (antipode),
// TensorElement (coproduct), ZSeries (counit).
template <class Image>
struct GenMap {
  bool anti = false;
  std::vector<Image> images;
};

using AlgMap = GenMap<AlgebraElement>;
using CoprodMap = GenMap<TensorElement>;
using CounitMap = GenMap<ZSeries>;

AlgebraElement apply(const AlgMap& m, const AlgebraElement& e,
                     NormalOrderer& no);
TensorElement apply(const CoprodMap& m, const AlgebraElement& e,
                    NormalOrderer& no);
ZSeries apply(const CounitMap& m, const AlgebraElement& e);

// Applies an algebra map to one tensor slot, leaving the others untouched.
TensorElement apply_slot(const AlgMap& m, const TensorElement& e, int slot,
                         NormalOrderer& no);
// Applies the coproduct to one slot, raising the rank by one.
TensorElement apply_coproduct_slot(const CoprodMap& m, const TensorElement& e,
                                   int slot, NormalOrderer& no);
// Applies the counit to one slot, lowering the rank to 1.
AlgebraElement apply_counit_slot(const CounitMap& m, const TensorElement& e,
                                 int slot, NormalOrderer& no);
// Multiplies the two slots of a rank-2 element together.
AlgebraElement multiply_slots(const TensorElement& e, NormalOrderer& no);

} // namespace nullplane
