#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace permclass {

// Dense truncated formal power series with exact coefficients at indices
// 0..order.  Arithmetic requires matching orders and truncates products.
template <typename Coeff>
class SeriesT {
 public:
  SeriesT() = default;
  explicit SeriesT(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, Coeff(0));
  }

  static SeriesT x(int order) {
    SeriesT s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }
  static SeriesT constant(const Coeff& v, int order) {
    SeriesT s(order);
    s.c_[0] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Coeff& operator[](int k) const { return c_[k]; }
  Coeff& operator[](int k) { return c_[k]; }

  bool is_zero() const {
    for (const Coeff& v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  // Index of the lowest nonzero coefficient; order()+1 when zero.
  int valuation() const {
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] != 0) return static_cast<int>(k);
    }
    return order() + 1;
  }

  SeriesT& operator+=(const SeriesT& o) {
    check_order(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  SeriesT& operator-=(const SeriesT& o) {
    check_order(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend SeriesT operator+(SeriesT a, const SeriesT& b) { return a += b; }
  friend SeriesT operator-(SeriesT a, const SeriesT& b) { return a -= b; }

  SeriesT operator*(const SeriesT& o) const {
    check_order(o);
    const int n = order();
    SeriesT r(n);
    for (int i = 0; i <= n; ++i) {
      if (c_[i] == 0) continue;
      for (int j = 0; j + i <= n; ++j) {
        if (o.c_[j] == 0) continue;
        r.c_[i + j] += c_[i] * o.c_[j];
      }
    }
    return r;
  }
  SeriesT& operator*=(const SeriesT& o) { return *this = *this * o; }

  SeriesT& operator*=(const Coeff& k) {
    for (Coeff& v : c_) v *= k;
    return *this;
  }
  friend SeriesT operator*(SeriesT a, const Coeff& k) { return a *= k; }
  friend SeriesT operator*(const Coeff& k, SeriesT a) { return a *= k; }

  bool operator==(const SeriesT&) const = default;

 private:
  void check_order(const SeriesT& o) const {
    if (c_.size() != o.c_.size())
      throw std::invalid_argument("series order mismatch");
  }

  std::vector<Coeff> c_;
};

using ZSeries = SeriesT<mpz_class>;
using QSeries = SeriesT<mpq_class>;

// s(x^2): coefficient at x^{2k} is the input coefficient at x^k; the result
// has order 2*order.
ZSeries substitute_x_squared(const ZSeries& s);

QSeries to_rational(const ZSeries& s);
// Rejects non-integer coefficients.
ZSeries to_integer(const QSeries& s);

// The square root with constant term 1 (the input's constant term must be 1).
QSeries sqrt_series(const QSeries& a);

// Divide by x^k; the k lowest coefficients must vanish.  Order shrinks by k.
QSeries divide_by_x(const QSeries& s, int k);

// Comma-separated coefficient list starting at x^from, e.g. "1, 2, 6, 22".
std::string series_str(const ZSeries& s, int from = 1);

}  // namespace permclass
