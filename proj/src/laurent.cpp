#include "cluscat/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cluscat {

IVec trop_mul(const IVec& a, const IVec& b) { return ivec_add(a, b); }

IVec trop_oplus(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

IVec trop_oplus_one(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], 0);
  return r;
}

void Laurent::add_term(const IVec& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::monomial(int nx, int np, const IVec& exponents, Int coeff) {
  assert(int(exponents.size()) == nx + np);
  Laurent l(nx, np);
  l.add_term(exponents, coeff);
  return l;
}

Laurent Laurent::one(int nx, int np) { return monomial(nx, np, IVec(nx + np, 0)); }

Laurent Laurent::variable_x(int nx, int np, int i) {
  assert(0 <= i && i < nx);
  IVec e(nx + np, 0);
  e[i] = 1;
  return monomial(nx, np, e);
}

Laurent Laurent::variable_p(int nx, int np, int t) {
  assert(0 <= t && t < np);
  IVec e(nx + np, 0);
  e[nx + t] = 1;
  return monomial(nx, np, e);
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         ivec_is_zero(terms_.begin()->first);
}

Laurent Laurent::operator+(const Laurent& o) const {
  assert(nx_ == o.nx_ && np_ == o.np_);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  assert(nx_ == o.nx_ && np_ == o.np_);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  assert(nx_ == o.nx_ && np_ == o.np_);
  Laurent r(nx_, np_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(ivec_add(e1, e2), c1 * c2);
  return r;
}

Laurent Laurent::pow(int k) const {
  assert(k >= 0);
  Laurent r = one(nx_, np_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Laurent Laurent::divided_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::logic_error("division by zero Laurent polynomial");
  if (is_zero()) return Laurent(nx_, np_);
  Laurent rem = *this;
  Laurent quot(nx_, np_);
  // Repeatedly cancel the lex-leading term. The lex order is compatible with
  // exponent addition, so for an exact division every quotient exponent lies
  // between minkey(this)-minkey(d) and maxkey(this)-maxkey(d); the leading
  // exponent of rem strictly drops each round, which bounds the loop by the
  // number of quotient terms. Leaving the window certifies non-exactness.
  const IVec low_bound = ivec_sub(terms_.begin()->first, d.terms().begin()->first);
  size_t guard = 10'000'000;
  while (!rem.is_zero()) {
    if (guard-- == 0) throw std::logic_error("non-exact Laurent division (no convergence)");
    const auto& [re, rc] = *rem.terms_.rbegin();
    const auto& [de, dc] = *d.terms_.rbegin();
    Int q = rc / dc;
    if (q * dc != rc) throw std::logic_error("non-exact Laurent division (coefficient)");
    const IVec qe = ivec_sub(re, de);
    if (qe < low_bound) throw std::logic_error("non-exact Laurent division (remainder)");
    Laurent t = monomial(nx_, np_, qe, q);
    quot = quot + t;
    rem = rem - t * d;
  }
  return quot;
}

IVec Laurent::denominator_x() const {
  if (terms_.empty()) throw std::logic_error("denominator of zero");
  IVec mins(nx_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    for (int i = 0; i < nx_; ++i)
      mins[i] = first ? e[i] : std::min(mins[i], e[i]);
    first = false;
  }
  return ivec_neg(mins);
}

std::string Laurent::to_string(const std::vector<std::string>& x_names_in,
                               const std::vector<std::string>& p_names_in) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> xs = x_names_in, ps = p_names_in;
  if (xs.empty())
    for (int i = 0; i < nx_; ++i) xs.push_back("x" + std::to_string(i + 1));
  if (ps.empty())
    for (int t = 0; t < np_; ++t) ps.push_back("p" + std::to_string(t + 1));

  std::string out;
  for (const auto& [e, c] : terms_) {
    Int coeff = c;
    if (out.empty()) {
      if (coeff < 0) { out += "-"; coeff = -coeff; }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    std::string mono;
    auto emit = [&mono](const std::string& name, int exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (exp != 1) mono += "^" + std::to_string(exp);
    };
    for (int i = 0; i < nx_; ++i) emit(xs[i], e[i]);
    for (int t = 0; t < np_; ++t) emit(ps[t], e[nx_ + t]);
    if (mono.empty()) {
      out += coeff.get_str();
    } else {
      if (coeff != 1) out += coeff.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace cluscat
