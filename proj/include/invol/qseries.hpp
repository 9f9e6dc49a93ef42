#pragma once

#include "invol/numeric.hpp"

#include <utility>
#include <vector>

namespace invol {

/// Power series in u truncated at degree order(), exact rational
/// coefficients. q is the rational base the series was built at; it only
/// guards against mixing series from different bases.
class USeries {
 public:
  USeries(unsigned order, BigRat q);

  static USeries one(unsigned order, const BigRat& q);
  static USeries monomial(const BigRat& coeff, unsigned degree, unsigned order, const BigRat& q);
  /// 1/(1 - x u^m).
  static USeries geometric(const BigRat& x, unsigned m, unsigned order, const BigRat& q);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const BigRat& q() const { return q_; }
  const BigRat& operator[](unsigned degree) const { return coeffs_.at(degree); }
  void set(unsigned degree, BigRat value);
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  USeries& operator+=(const USeries& rhs);
  USeries& operator-=(const USeries& rhs);
  USeries& operator*=(const USeries& rhs);
  USeries& operator*=(const BigRat& s);

  friend bool operator==(const USeries& a, const USeries& b) { return a.q_ == b.q_ && a.coeffs_ == b.coeffs_; }

 private:
  void check_compatible(const USeries& rhs) const;

  BigRat q_;
  std::vector<BigRat> coeffs_;
};

USeries operator+(USeries a, const USeries& b);
USeries operator-(USeries a, const USeries& b);
USeries operator*(USeries a, const USeries& b);
USeries operator*(USeries a, const BigRat& s);
USeries series_scale(const USeries& x, const BigRat& s);
/// Multiplies by u^k, dropping what falls past the truncation.
USeries series_shift(const USeries& x, unsigned k);

/// (a; base)_n = prod_{k<n} (1 - a base^k).
BigRat poch(const BigRat& a, const BigRat& base, unsigned n);

enum class EulerSign { Product = +1, Reciprocal = -1 };

/// Product: prod_{k>=0} (1 + c u^m Q^k) = sum_j (c u^m)^j Q^{C(j,2)} / (Q;Q)_j.
/// Reciprocal: prod_{k>=0} (1 - c u^m Q^k)^{-1} = sum_j (c u^m)^j / (Q;Q)_j.
/// Both are exact coefficientwise at any truncation; requires -1 < Q < 1.
USeries euler_expand(const BigRat& c, unsigned m, const BigRat& Q, EulerSign sign, unsigned order,
                     const BigRat& base_q);

struct SeriesPair {
  USeries lhs;
  USeries rhs;
};

/// Double sum versus (-a/q;1/q)(-b/q;1/q)/(ab/q;1/q) with a = alpha u, b = beta u.
SeriesPair H_series(const BigRat& alpha, const BigRat& beta, const BigRat& q, unsigned order);

/// Double sum versus a^t q^{C(t,2)} (-a q^{t-1};1/q) / (b q^{-s/2};1/q)
/// with a = alpha u, b = beta u^s. s must be even and >= 2.
SeriesPair G_series(const BigRat& alpha, const BigRat& beta, const BigRat& q, unsigned s, unsigned t,
                    unsigned order);

}  // namespace invol
