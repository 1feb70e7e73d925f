#pragma once
// Laurent polynomials with integer coefficients in two groups of variables:
// cluster variables x1..x_nx and coefficient-semifield generators p1..p_np.
// This is the ring ZP[x^{±1}] with P the tropical semifield on the p's, the
// group ring of P being Laurent monomials in the p's over Z.

#include <map>
#include <string>
#include <vector>

#include "cluscat/exact.hpp"
#include "cluscat/root_system.hpp"

namespace cluscat {

// Tropical monomials are bare exponent vectors over the p generators;
// multiplication adds them, oplus takes the componentwise minimum.
IVec trop_mul(const IVec& a, const IVec& b);
IVec trop_oplus(const IVec& a, const IVec& b);
// y oplus 1: componentwise min against zero.
IVec trop_oplus_one(const IVec& a);

class Laurent {
 public:
  Laurent() : nx_(0), np_(0) {}
  Laurent(int nx, int np) : nx_(nx), np_(np) {}
  static Laurent monomial(int nx, int np, const IVec& exponents, Int coeff = 1);
  static Laurent one(int nx, int np);
  static Laurent variable_x(int nx, int np, int i);
  static Laurent variable_p(int nx, int np, int t);

  int nx() const { return nx_; }
  int np() const { return np_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<IVec, Int>& terms() const { return terms_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent& o) const {
    return nx_ == o.nx_ && np_ == o.np_ && terms_ == o.terms_;
  }
  Laurent pow(int k) const;  // k >= 0

  // Exact division; throws std::logic_error when *this is not a multiple of d.
  Laurent divided_exact(const Laurent& d) const;

  // Componentwise minimum of the x-exponents over all terms, negated: the
  // denominator vector of the variable in the initial cluster.
  IVec denominator_x() const;

  // Deterministic rendering, terms in ascending exponent order:
  // "x1^2*p3 - 2*x2^-1 + 1" style. Used for canonical seed keys as well.
  std::string to_string(const std::vector<std::string>& x_names = {},
                        const std::vector<std::string>& p_names = {}) const;

 private:
  int nx_, np_;
  std::map<IVec, Int> terms_;  // exponent vector (x part then p part) -> coeff
  void add_term(const IVec& e, const Int& c);
};

}  // namespace cluscat
