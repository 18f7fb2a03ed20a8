#include "nullplane/normal_order.hpp"

#include "nullplane/errors.hpp"

namespace nullplane {

void BracketTable::set(int hi, int lo, AlgebraElement rhs) {
  if (hi <= lo) throw EngineError("bracket table rows need rank(X) > rank(Y)");
  if (rhs.is_zero())
    table_.erase({hi, lo});
  else
    table_.insert_or_assign({hi, lo}, std::move(rhs));
}

const AlgebraElement* BracketTable::get(int hi, int lo) const {
  auto it = table_.find({hi, lo});
  return it == table_.end() ? nullptr : &it->second;
}

AlgebraElement BracketTable::bracket(int x, int y) const {
  if (x == y) return AlgebraElement(order_);
  const AlgebraElement* e = x > y ? get(x, y) : get(y, x);
  if (!e) return AlgebraElement(order_);
  return x > y ? *e : -*e;
}

const AlgebraElement& NormalOrderer::word_normal_form(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  if (++steps_ > budget_)
    throw EngineError("normal-ordering step budget exceeded; "
                      "the bracket table does not terminate");

  size_t descent = w.size();
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      descent = i;
      break;
    }
  }

  AlgebraElement out(table_.order());
  if (descent == w.size()) {
    out.add_term(w, ZSeries(table_.order(), 1));
  } else {
    Word swapped = w;
    std::swap(swapped[descent], swapped[descent + 1]);
    out = word_normal_form(swapped);
    if (const AlgebraElement* br = table_.get(w[descent], w[descent + 1])) {
      for (const auto& [u, c] : br->terms()) {
        Word spliced(w.begin(), w.begin() + descent);
        spliced.insert(spliced.end(), u.begin(), u.end());
        spliced.insert(spliced.end(), w.begin() + descent + 2, w.end());
        out.add_scaled(word_normal_form(spliced), c);
      }
    }
  }
  return cache_.emplace(w, std::move(out)).first->second;
}

AlgebraElement NormalOrderer::normal_form(const AlgebraElement& e) {
  AlgebraElement out(e.order());
  for (const auto& [w, c] : e.terms())
    out.add_scaled(word_normal_form(w), c);
  return out;
}

AlgebraElement NormalOrderer::product(const AlgebraElement& a,
                                      const AlgebraElement& b) {
  return normal_form(a * b);
}

AlgebraElement NormalOrderer::commutator(const AlgebraElement& a,
                                         const AlgebraElement& b) {
  return normal_form(a * b - b * a);
}

AlgebraElement NormalOrderer::jacobi_defect(int x, int y, int w) {
  int K = table_.order();
  auto gx = AlgebraElement::generator(K, static_cast<uint8_t>(x));
  auto gy = AlgebraElement::generator(K, static_cast<uint8_t>(y));
  auto gw = AlgebraElement::generator(K, static_cast<uint8_t>(w));
  AlgebraElement d = commutator(gx, commutator(gy, gw));
  d += commutator(gy, commutator(gw, gx));
  d += commutator(gw, commutator(gx, gy));
  return d;
}

} // namespace nullplane
