#include "invol/hpreal.hpp"

#include <algorithm>
#include <stdexcept>

namespace invol {

namespace {

BigInt ten_pow(unsigned e) { return pow(BigInt(10), e); }

BigRat abs_rat(const BigRat& r) { return r < 0 ? BigRat(-r) : r; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void require_same_scale(const HPReal& a, const HPReal& b) {
  if (a.scale() != b.scale()) throw std::invalid_argument("HPReal scale mismatch");
}

}  // namespace

HPReal::HPReal(BigInt mantissa, unsigned scale, BigRat err)
    : mantissa_(std::move(mantissa)), scale_(scale), err_(std::move(err)) {
  if (err_ < 0) throw std::invalid_argument("negative error bound");
  normalize_err();
}

HPReal HPReal::from_rational(const BigRat& value, unsigned scale) {
  const BigInt unit = ten_pow(scale);
  BigInt m = floor_div(value.get_num() * unit, value.get_den());
  BigRat below(m, unit);
  below.canonicalize();
  BigRat residual = value - below;
  return HPReal(m, scale, residual);
}

BigRat HPReal::ulp() const {
  BigRat u(BigInt(1), ten_pow(scale_));
  return u;
}

void HPReal::normalize_err() {
  if (err_ == 0) return;
  // ceil(err * 10^scale) ulps
  const BigInt unit = ten_pow(scale_);
  BigInt ulps;
  BigInt num = err_.get_num() * unit;
  mpz_cdiv_q(ulps.get_mpz_t(), num.get_mpz_t(), err_.get_den().get_mpz_t());
  err_ = BigRat(ulps, unit);
  err_.canonicalize();
}

BigRat HPReal::mid() const {
  BigRat m(mantissa_, ten_pow(scale_));
  m.canonicalize();
  return m;
}

BigRat HPReal::magnitude_bound() const { return abs_rat(mid()) + err_; }

bool HPReal::contains(const BigRat& x) const { return lower() <= x && x <= upper(); }

HPReal HPReal::operator-() const { return HPReal(-mantissa_, scale_, err_); }

HPReal operator+(const HPReal& a, const HPReal& b) {
  require_same_scale(a, b);
  return HPReal(a.mantissa_ + b.mantissa_, a.scale_, a.err_ + b.err_);
}

HPReal operator-(const HPReal& a, const HPReal& b) { return a + (-b); }

HPReal operator*(const HPReal& a, const HPReal& b) {
  require_same_scale(a, b);
  const BigInt unit = ten_pow(a.scale_);
  const BigInt prod = a.mantissa_ * b.mantissa_;
  BigInt m = floor_div(prod, unit);
  BigRat err = abs_rat(a.mid()) * b.err_ + abs_rat(b.mid()) * a.err_ + a.err_ * b.err_;
  if (m * unit != prod) err += a.ulp();
  return HPReal(m, a.scale_, err);
}

HPReal operator*(const HPReal& a, const BigRat& r) {
  BigInt num = a.mantissa_ * r.get_num();
  BigInt m = floor_div(num, r.get_den());
  BigRat err = abs_rat(r) * a.err_;
  if (m * r.get_den() != num) err += a.ulp();
  return HPReal(m, a.scale_, err);
}

HPReal operator/(const HPReal& a, const HPReal& b) {
  require_same_scale(a, b);
  const BigRat y = abs_rat(b.mid());
  if (y <= b.err_) throw std::domain_error("HPReal division by an enclosure containing zero");
  const BigInt unit = ten_pow(a.scale_);
  const BigInt num = a.mantissa_ * unit;
  BigInt m = floor_div(num, b.mantissa_);
  BigRat err = (a.err_ * y + abs_rat(a.mid()) * b.err_) / (y * (y - b.err_));
  if (m * b.mantissa_ != num) err += a.ulp();
  return HPReal(m, a.scale_, err);
}

HPReal HPReal::widened(const BigRat& extra) const {
  if (extra < 0) throw std::invalid_argument("negative widening");
  return HPReal(mantissa_, scale_, err_ + extra);
}

std::string HPReal::decimal(unsigned digits) const {
  BigInt m = mantissa_;
  const bool negative = m < 0;
  if (negative) m = -m;
  if (digits < scale_) m /= ten_pow(scale_ - digits);
  else m *= ten_pow(digits - scale_);
  std::string s = m.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits) out += "." + s.substr(s.size() - digits);
  return negative ? "-" + out : out;
}

long HPReal::err_exponent() const {
  if (err_ == 0) return -static_cast<long>(scale_) - 1;
  long e = -static_cast<long>(scale_);
  BigRat bound(BigInt(1), ten_pow(scale_));
  while (bound < err_) {
    bound *= 10;
    ++e;
  }
  return e;
}

bool certainly_consistent(const HPReal& a, const HPReal& b) {
  return abs_rat(a.mid() - b.mid()) <= a.err() + b.err();
}

bool certainly_begins_with(const HPReal& x, std::string_view printed) {
  BigRat p = 0;
  std::string s(printed);
  auto dot = s.find('.');
  const unsigned k = dot == std::string::npos ? 0 : static_cast<unsigned>(s.size() - dot - 1);
  std::string digits = s;
  if (dot != std::string::npos) digits.erase(dot, 1);
  p = BigRat(BigInt(digits, 10), ten_pow(k));
  p.canonicalize();
  BigRat step(BigInt(1), ten_pow(k));
  step.canonicalize();
  if (p < 0) return x.lower() > p - step && x.upper() <= p;
  return x.lower() >= p && x.upper() < p + step;
}

}  // namespace invol
