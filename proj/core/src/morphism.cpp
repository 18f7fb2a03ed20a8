#include "nullplane/morphism.hpp"

#include "nullplane/errors.hpp"

namespace nullplane {

namespace {

template <class Image, class Unit, class Mul>
auto apply_word(const GenMap<Image>& m, const Word& w, Unit unit, Mul mul) {
  auto acc = unit();
  if (m.anti) {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      acc = mul(acc, m.images[*it]);
  } else {
    for (uint8_t g : w) acc = mul(acc, m.images[g]);
  }
  return acc;
}

} // namespace

AlgebraElement apply(const AlgMap& m, const AlgebraElement& e,
                     NormalOrderer& no) {
  int K = e.order();
  AlgebraElement out(K);
  for (const auto& [w, c] : e.terms()) {
    auto img = apply_word(
        m, w, [&] { return AlgebraElement::unit(K); },
        [&](const AlgebraElement& a, const AlgebraElement& b) {
          return no.product(a, b);
        });
    out.add_scaled(img, c);
  }
  return out;
}

TensorElement apply(const CoprodMap& m, const AlgebraElement& e,
                    NormalOrderer& no) {
  int K = e.order();
  TensorElement out(K, 2);
  for (const auto& [w, c] : e.terms()) {
    auto img = apply_word(
        m, w, [&] { return TensorElement::unit(K, 2); },
        [&](const TensorElement& a, const TensorElement& b) {
          TensorElement prod = a * b;
          TensorElement ordered(K, 2);
          for (const auto& [k, kc] : prod.terms()) {
            auto na = no.word_normal_form(k[0]);
            auto nb = no.word_normal_form(k[1]);
            ordered.add_scaled(tensor(na, nb), kc);
          }
          return ordered;
        });
    out.add_scaled(img, c);
  }
  return out;
}

ZSeries apply(const CounitMap& m, const AlgebraElement& e) {
  int K = e.order();
  ZSeries out(K);
  for (const auto& [w, c] : e.terms()) {
    ZSeries prod(K, 1);
    for (uint8_t g : w) prod = prod * m.images[g];
    out += prod * c;
  }
  return out;
}

TensorElement apply_slot(const AlgMap& m, const TensorElement& e, int slot,
                         NormalOrderer& no) {
  int K = e.order();
  TensorElement out(K, e.rank());
  for (const auto& [k, c] : e.terms()) {
    auto img = apply_word(
        m, k[slot], [&] { return AlgebraElement::unit(K); },
        [&](const AlgebraElement& a, const AlgebraElement& b) {
          return no.product(a, b);
        });
    for (const auto& [iw, ic] : img.terms()) {
      TensorElement::Key key = k;
      key[slot] = iw;
      out.add_term(std::move(key), ic * c);
    }
  }
  return out;
}

TensorElement apply_coproduct_slot(const CoprodMap& m, const TensorElement& e,
                                   int slot, NormalOrderer& no) {
  int K = e.order();
  TensorElement out(K, e.rank() + 1);
  for (const auto& [k, c] : e.terms()) {
    AlgebraElement mono =
        AlgebraElement::monomial(K, k[slot], ZSeries(K, 1));
    TensorElement img = apply(m, mono, no);
    for (const auto& [ik, ic] : img.terms()) {
      TensorElement::Key key;
      key.reserve(k.size() + 1);
      for (int s = 0; s < static_cast<int>(k.size()); ++s) {
        if (s == slot) {
          key.push_back(ik[0]);
          key.push_back(ik[1]);
        } else {
          key.push_back(k[s]);
        }
      }
      out.add_term(std::move(key), ic * c);
    }
  }
  return out;
}

AlgebraElement apply_counit_slot(const CounitMap& m, const TensorElement& e,
                                 int slot, NormalOrderer& no) {
  if (e.rank() != 2) throw EngineError("counit slot application needs rank 2");
  int K = e.order();
  AlgebraElement out(K);
  for (const auto& [k, c] : e.terms()) {
    ZSeries scalar(K, 1);
    for (uint8_t g : k[slot]) scalar = scalar * m.images[g];
    scalar = scalar * c;
    if (scalar.is_zero()) continue;
    out.add_scaled(no.word_normal_form(k[1 - slot]), scalar);
  }
  return out;
}

AlgebraElement multiply_slots(const TensorElement& e, NormalOrderer& no) {
  if (e.rank() != 2) throw EngineError("slot multiplication needs rank 2");
  int K = e.order();
  AlgebraElement out(K);
  for (const auto& [k, c] : e.terms()) {
    Word w = k[0];
    w.insert(w.end(), k[1].begin(), k[1].end());
    out.add_scaled(no.word_normal_form(w), c);
  }
  return out;
}

} // namespace nullplane
