#include "permclass/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace permclass {

namespace {

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Mono mono_add(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

Poly Poly::constant(const mpz_class& c, int nvars) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::var(int v, int nvars) {
  if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  Mono m(nvars, 0);
  m[v] = 1;
  p.add_term(std::move(m), 1);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Mono& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

void Poly::add_term(Mono m, const mpz_class& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(mono_add(ma, mb), ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const mpz_class& k) const {
  Poly r(nvars_);
  if (k == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

int Poly::degree(int v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

Poly Poly::coeff_of(int v, int k) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == k) {
      Mono stripped = m;
      stripped[v] = 0;
      r.add_term(std::move(stripped), c);
    }
  }
  return r;
}

Poly Poly::derivative(int v) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Mono d = m;
    d[v] -= 1;
    r.add_term(std::move(d), c * m[v]);
  }
  return r;
}

mpz_class Poly::integer_content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    g = zgcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Mono Poly::monomial_content() const {
  Mono mc(nvars_, 0);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      mc = m;
      first = false;
    } else {
      for (int i = 0; i < nvars_; ++i) mc[i] = std::min(mc[i], m[i]);
    }
  }
  return mc;
}

Poly Poly::divide_by_monomial(const Mono& m) const {
  Poly r(nvars_);
  for (const auto& [mt, c] : terms_) {
    Mono d(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      d[i] = mt[i] - m[i];
      if (d[i] < 0) throw std::domain_error("monomial division not exact");
    }
    r.add_term(std::move(d), c);
  }
  return r;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (nvars_ != d.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly q(nvars_);
  Poly r = *this;
  const auto& [dm, dc] = *d.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms_.rbegin();
    Mono qm(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      qm[i] = rm[i] - dm[i];
      if (qm[i] < 0) throw std::domain_error("polynomial division not exact");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw std::domain_error("polynomial division not exact");
    mpz_class qc = rc / dc;
    Poly t(nvars_);
    t.add_term(qm, qc);
    q += t;
    r -= t * d;
  }
  return q;
}

ZSeries Poly::eval(const std::vector<ZSeries>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw std::invalid_argument("eval: value count mismatch");
  int order = values.empty() ? 0 : values[0].order();
  // Lazily build per-variable power tables.
  std::vector<std::vector<ZSeries>> pows(nvars_);
  ZSeries one = ZSeries::constant(1, order);
  auto power = [&](int v, int e) -> const ZSeries& {
    auto& tab = pows[v];
    if (tab.empty()) tab.push_back(one);
    while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * values[v]);
    return tab[e];
  };
  ZSeries acc(order);
  for (const auto& [m, c] : terms_) {
    ZSeries t = one * c;
    for (int v = 0; v < nvars_; ++v) {
      if (m[v] > 0) t = t * power(v, m[v]);
    }
    acc += t;
  }
  return acc;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("str: name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string vars;
    for (int v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[v];
      if (m[v] > 1) vars += "^" + std::to_string(m[v]);
    }
    if (vars.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += vars;
    } else {
      out += a.get_str() + "*" + vars;
    }
  }
  return out;
}

Poly pow(Poly base, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly r = Poly::constant(1, base.nvars());
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Poly prem(const Poly& a, const Poly& b, int v) {
  if (b.is_zero()) throw std::invalid_argument("prem: zero divisor");
  const int db = b.degree(v);
  int da = a.degree(v);
  if (da < db) return a;
  Poly r = a;
  Poly lcb = b.leading_coeff(v);
  int e = da - db + 1;
  while (!r.is_zero() && (da = r.degree(v)) >= db) {
    // r <- lcb*r - lc_v(r) * v^(da-db) * b
    Poly shift(r.nvars());
    Mono m(r.nvars(), 0);
    m[v] = da - db;
    shift.add_term(std::move(m), 1);
    r = lcb * r - r.leading_coeff(v) * shift * b;
    --e;
  }
  return r * pow(lcb, e);
}

Poly subresultant_last(Poly a, Poly b, int v) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  Poly g = Poly::constant(1, a.nvars());
  Poly h = g;
  while (true) {
    if (b.degree(v) == 0) return b;
    int delta = a.degree(v) - b.degree(v);
    Poly r = prem(a, b, v);
    if (r.is_zero()) return b;
    Poly c = r.divide_exact(g * pow(h, delta));
    a = b;
    b = c;
    g = a.leading_coeff(v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = pow(g, delta).divide_exact(pow(h, delta - 1));
    }
  }
}

Poly gcd_univariate(Poly a, Poly b, int v) {
  auto strip = [](Poly p) {
    mpz_class c = p.integer_content();
    if (c > 1) p = p.divide_exact(Poly::constant(c, p.nvars()));
    return p;
  };
  if (a.is_zero() && b.is_zero()) return a;
  // Primitive pseudo-remainder sequence.
  while (!b.is_zero()) {
    if (a.degree(v) < b.degree(v)) {
      std::swap(a, b);
      continue;
    }
    Poly r = strip(prem(a, b, v));
    a = std::move(b);
    b = std::move(r);
  }
  a = strip(std::move(a));
  if (!a.is_zero() && a.terms().rbegin()->second < 0) a = -a;
  return a;
}

Poly squarefree_part_bivariate(const Poly& p, int vmain, int vcoeff) {
  if (p.is_zero()) return p;
  // Strip content: the gcd of the vmain-coefficients (univariate in vcoeff).
  Poly content(p.nvars());
  for (int k = 0; k <= p.degree(vmain); ++k) {
    content = gcd_univariate(content, p.coeff_of(vmain, k), vcoeff);
    if (!content.is_zero() && content.is_constant()) break;
  }
  Poly pp = content.is_constant() ? p : p.divide_exact(content);
  mpz_class ic = pp.integer_content();
  if (ic > 1) pp = pp.divide_exact(Poly::constant(ic, p.nvars()));

  Poly d = pp.derivative(vmain);
  if (d.is_zero()) return pp;
  Poly last = subresultant_last(pp, d, vmain);
  if (last.is_zero() || last.degree(vmain) == 0) return pp;

  // Positive vmain-degree: strip the repeated factor.
  Poly gcontent(p.nvars());
  for (int k = 0; k <= last.degree(vmain); ++k) {
    gcontent = gcd_univariate(gcontent, last.coeff_of(vmain, k), vcoeff);
    if (!gcontent.is_zero() && gcontent.is_constant()) break;
  }
  Poly g = gcontent.is_constant() ? last : last.divide_exact(gcontent);
  mpz_class gc = g.integer_content();
  if (gc > 1) g = g.divide_exact(Poly::constant(gc, p.nvars()));
  Poly out = pp.divide_exact(g);
  mpz_class oc = out.integer_content();
  if (oc > 1) out = out.divide_exact(Poly::constant(oc, p.nvars()));
  return out;
}

}  // namespace permclass
