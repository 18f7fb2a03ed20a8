#pragma once
#include "nullplane/zseries.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nullplane {

// A word in the free monoid on generator ids; ids double as PBW ranks.
using Word = std::vector<uint8_t>;

// Graded-lexicographic order: shorter words first, then by generator ids.
struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct TupleLess {
  bool operator()(const std::vector<Word>& a,
                  const std::vector<Word>& b) const {
    size_t ta = 0, tb = 0;
    for (const auto& w : a) ta += w.size();
    for (const auto& w : b) tb += w.size();
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

inline bool word_is_ordered(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) return false;
  return true;
}

// Element of the enveloping algebra over the truncated series ring: a finite
// sum of words with ZSeries coefficients, all at one truncation order.
class AlgebraElement {
public:
  using Terms = std::map<Word, ZSeries, GradedLex>;

  explicit AlgebraElement(int order) : order_(order) {}
  static AlgebraElement unit(int order, const Rational& c = 1) {
    AlgebraElement e(order);
    e.add_term({}, ZSeries(order, c));
    return e;
  }
  static AlgebraElement generator(int order, uint8_t id) {
    AlgebraElement e(order);
    e.add_term({id}, ZSeries(order, 1));
    return e;
  }
  static AlgebraElement monomial(int order, Word w,
                                 const ZSeries& coeff) {
    AlgebraElement e(order);
    e.add_term(std::move(w), coeff);
    return e;
  }

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const {
    for (const auto& [w, c] : terms_)
      if (!word_is_ordered(w)) return false;
    return true;
  }

  void add_term(Word w, const ZSeries& c);
  void add_scaled(const AlgebraElement& e, const ZSeries& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  AlgebraElement& operator*=(const Rational& r);
  AlgebraElement& operator*=(const ZSeries& c);

  bool operator==(const AlgebraElement&) const = default;

  // Names indexed by generator id; used for diagnostics and reports.
  std::string str(const std::vector<std::string>& names) const;

private:
  int order_;
  Terms terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
// Free product: concatenates words; no reordering happens here.
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

// Element of the tensor square/cube with componentwise words.
class TensorElement {
public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, ZSeries, TupleLess>;

  TensorElement(int order, int rank) : order_(order), rank_(rank) {}
  static TensorElement unit(int order, int rank, const Rational& c = 1) {
    TensorElement e(order, rank);
    e.add_term(Key(rank), ZSeries(order, c));
    return e;
  }

  int order() const { return order_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Key k, const ZSeries& c);
  void add_scaled(const TensorElement& e, const ZSeries& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement operator-() const;

  bool operator==(const TensorElement&) const = default;

  std::string str(const std::vector<std::string>& names) const;

private:
  int order_;
  int rank_;
  Terms terms_;
};

// Componentwise free product (slotwise concatenation, no cross signs).
TensorElement operator*(const TensorElement& a, const TensorElement& b);
// a ⊗ b and a ⊗ b ⊗ c.
TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b);
TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b,
                     const AlgebraElement& c);

std::string word_str(const Word& w, const std::vector<std::string>& names);

} // namespace nullplane
