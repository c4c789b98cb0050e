#include "permclass/series.hpp"

namespace permclass {

ZSeries substitute_x_squared(const ZSeries& s) {
  ZSeries r(2 * s.order());
  for (int k = 0; k <= s.order(); ++k) r[2 * k] = s[k];
  return r;
}

QSeries to_rational(const ZSeries& s) {
  QSeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = mpq_class(s[k]);
  return r;
}

ZSeries to_integer(const QSeries& s) {
  ZSeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k].get_den() != 1)
      throw std::invalid_argument("series coefficient is not an integer");
    r[k] = s[k].get_num();
  }
  return r;
}

QSeries sqrt_series(const QSeries& a) {
  if (a[0] != 1) throw std::invalid_argument("sqrt_series: constant term must be 1");
  const int n = a.order();
  QSeries s(n);
  s[0] = 1;
  for (int k = 1; k <= n; ++k) {
    // a_k = sum_{i=0..k} s_i s_{k-i}  =>  2 s_k = a_k - sum_{i=1..k-1} s_i s_{k-i}
    mpq_class acc = a[k];
    for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc / 2;
  }
  return s;
}

QSeries divide_by_x(const QSeries& s, int k) {
  if (k < 0 || k > s.order())
    throw std::invalid_argument("divide_by_x: shift out of range");
  for (int i = 0; i < k; ++i) {
    if (s[i] != 0)
      throw std::invalid_argument("divide_by_x: low coefficient is nonzero");
  }
  QSeries r(s.order() - k);
  for (int i = k; i <= s.order(); ++i) r[i - k] = s[i];
  return r;
}

std::string series_str(const ZSeries& s, int from) {
  std::string out;
  for (int k = from; k <= s.order(); ++k) {
    if (k > from) out += ", ";
    out += s[k].get_str();
  }
  return out;
}

}  // namespace permclass
