#pragma once
#include "nullplane/errors.hpp"
#include "nullplane/rational.hpp"

#include <string>
#include <vector>

namespace nullplane {

// Truncated power series c0 + c1 z + ... + cK z^K with exact rational
// coefficients; all arithmetic is modulo z^(K+1) and requires equal K.
class ZSeries {
public:
  explicit ZSeries(int order) : c_(order + 1) {}
  ZSeries(int order, const Rational& constant) : c_(order + 1) {
    c_[0] = constant;
  }
  static ZSeries monomial(int order, int power, const Rational& coeff = 1) {
    ZSeries s(order);
    if (power <= order) s.c_[power] = coeff;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }

  bool is_zero() const;
  bool operator==(const ZSeries&) const = default;

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  ZSeries& operator*=(const Rational& r);
  ZSeries operator-() const;

  // Multiplies by z^shift, dropping what falls past the truncation order.
  ZSeries shifted(int shift) const;
  // Lowers the truncation order (new_order <= order).
  ZSeries truncated(int new_order) const;
  // Evaluates at a numeric value of z.
  double at(double z) const;
  Rational at(const Rational& z) const;

  std::string str() const;

private:
  std::vector<Rational> c_;

  void check_order(const ZSeries& o) const {
    if (c_.size() != o.c_.size())
      throw OrderMismatchError(order(), o.order());
  }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
};

ZSeries operator+(ZSeries a, const ZSeries& b);
ZSeries operator-(ZSeries a, const ZSeries& b);
ZSeries operator*(const ZSeries& a, const ZSeries& b);
ZSeries operator*(const Rational& r, ZSeries a);

enum class SeriesFn { Exp, Sinh, Cosh, SinhOverZ };

// Maps the names accepted in definition files: exp, sinh, cosh, sinhz.
SeriesFn series_fn_from_name(const std::string& name);
std::string series_fn_name(SeriesFn fn);

// Taylor series of fn(scale * z) up to z^order; SinhOverZ is sinh(scale*z)/z,
// whose constant term equals scale.
ZSeries expand_function(SeriesFn fn, const Rational& scale, int order);

// One term of fn(scale·z·X) expanded as sum_j coeff_j z^(zp_j) X^j for a
// commuting symbol X; SinhOverZ shifts every z-power down by one.
struct FnTerm {
  int gen_power;
  int z_power;
  Rational coeff;
};
// All terms with z_power <= order.
std::vector<FnTerm> expand_function_of_symbol(SeriesFn fn, const Rational& scale,
                                              int order);

} // namespace nullplane
