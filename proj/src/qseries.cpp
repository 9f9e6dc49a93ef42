#include "invol/qseries.hpp"

#include <stdexcept>

namespace invol {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

void require_base_above_one(const BigRat& q) {
  if (q <= 1) throw std::invalid_argument("q must exceed 1");
}

}  // namespace

USeries::USeries(unsigned order, BigRat q) : q_(std::move(q)), coeffs_(order + 1, BigRat(0)) {}

USeries USeries::one(unsigned order, const BigRat& q) { return monomial(1, 0, order, q); }

USeries USeries::monomial(const BigRat& coeff, unsigned degree, unsigned order, const BigRat& q) {
  USeries s(order, q);
  if (degree <= order) s.coeffs_[degree] = coeff;
  return s;
}

USeries USeries::geometric(const BigRat& x, unsigned m, unsigned order, const BigRat& q) {
  if (m == 0) throw std::invalid_argument("geometric series needs a positive degree step");
  USeries s(order, q);
  BigRat term = 1;
  for (unsigned d = 0; d <= order; d += m) {
    s.coeffs_[d] = term;
    term *= x;
  }
  return s;
}

void USeries::set(unsigned degree, BigRat value) { coeffs_.at(degree) = std::move(value); }

void USeries::check_compatible(const USeries& rhs) const {
  if (order() != rhs.order()) throw std::invalid_argument("series order mismatch");
  if (q_ != rhs.q_) throw std::invalid_argument("series base mismatch");
}

USeries& USeries::operator+=(const USeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

USeries& USeries::operator-=(const USeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

USeries& USeries::operator*=(const USeries& rhs) {
  check_compatible(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<BigRat> out(n, BigRat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (rhs.coeffs_[j] != 0) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

USeries& USeries::operator*=(const BigRat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

USeries operator+(USeries a, const USeries& b) { return a += b; }
USeries operator-(USeries a, const USeries& b) { return a -= b; }
USeries operator*(USeries a, const USeries& b) { return a *= b; }
USeries operator*(USeries a, const BigRat& s) { return a *= s; }
USeries series_scale(const USeries& x, const BigRat& s) { return x * s; }

USeries series_shift(const USeries& x, unsigned k) {
  USeries out(x.order(), x.q());
  for (unsigned d = 0; d + k <= x.order(); ++d) out.set(d + k, x[d]);
  return out;
}

BigRat poch(const BigRat& a, const BigRat& base, unsigned n) {
  BigRat acc = 1, power = 1;
  for (unsigned k = 0; k < n; ++k) {
    acc *= 1 - a * power;
    power *= base;
  }
  return acc;
}

USeries euler_expand(const BigRat& c, unsigned m, const BigRat& Q, EulerSign sign, unsigned order,
                     const BigRat& base_q) {
  if (Q <= -1 || Q >= 1) throw std::invalid_argument("Euler expansion needs -1 < Q < 1");
  if (m == 0) throw std::invalid_argument("Euler expansion needs m >= 1");
  USeries s(order, base_q);
  BigRat cj = 1;     // c^j
  BigRat qpoch = 1;  // (Q;Q)_j
  BigRat tri = 1;    // Q^{C(j,2)}
  BigRat qj = 1;     // Q^j
  for (unsigned j = 0; static_cast<unsigned long>(j) * m <= order; ++j) {
    BigRat term = cj / qpoch;
    if (sign == EulerSign::Product) term *= tri;
    s.set(j * m, term);
    cj *= c;
    tri *= qj;
    qj *= Q;
    qpoch *= 1 - qj;
  }
  return s;
}

SeriesPair H_series(const BigRat& alpha, const BigRat& beta, const BigRat& q, unsigned order) {
  require_base_above_one(q);
  // (q;q)_k q^{C(k,2)} for k = 0..order
  std::vector<BigRat> denom(order + 1);
  for (unsigned k = 0; k <= order; ++k) denom[k] = poch(q, q, k) * pow(q, choose2(k));

  USeries lhs(order, q);
  for (unsigned m = 0; m <= order; ++m) {
    BigRat inner = 0;
    for (unsigned k = 0; k <= m; ++k)
      inner += pow(BigRat(-alpha), m - k) * pow(BigRat(-beta), k) / (denom[k] * denom[m - k]);
    lhs.set(m, pow(q, choose2(m)) * inner);
  }

  const BigRat Q = 1 / q;
  USeries rhs = euler_expand(alpha / q, 1, Q, EulerSign::Product, order, q) *
                euler_expand(beta / q, 1, Q, EulerSign::Product, order, q) *
                euler_expand(alpha * beta / q, 2, Q, EulerSign::Reciprocal, order, q);
  return {std::move(lhs), std::move(rhs)};
}

SeriesPair G_series(const BigRat& alpha, const BigRat& beta, const BigRat& q, unsigned s, unsigned t,
                    unsigned order) {
  require_base_above_one(q);
  if (s == 0 || s % 2) throw std::invalid_argument("s must be a positive even integer");
  const BigRat Q = 1 / q;

  USeries lhs(order, q);
  for (unsigned n = t; n <= order; ++n) {
    BigRat inner = 0;
    for (unsigned r = 0; s * r + t <= n; ++r) {
      const long rest = static_cast<long>(n) - static_cast<long>(s * r) - static_cast<long>(t);
      const long cross = static_cast<long>(r) * (static_cast<long>(s) * n) -
                         static_cast<long>(r) * r * (2 + static_cast<long>(s) * s) / 2;
      BigRat den = pow(q, static_cast<long>(r) * r) * poch(Q, Q, r) * pow(q, rest * rest) *
                   poch(Q, Q, static_cast<unsigned>(rest)) * pow(q, cross);
      inner += pow(alpha, static_cast<long>(n - s * r)) * pow(beta, r) / den;
    }
    lhs.set(n, pow(q, choose2(n)) * inner);
  }

  USeries rhs = euler_expand(alpha * pow(q, static_cast<long>(t) - 1), 1, Q, EulerSign::Product, order, q) *
                euler_expand(beta * pow(q, -static_cast<long>(s / 2)), s, Q, EulerSign::Reciprocal, order, q);
  rhs = series_shift(rhs, t) * (pow(alpha, t) * pow(q, choose2(t)));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace invol
