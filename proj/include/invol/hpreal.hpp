#pragma once

#include "invol/numeric.hpp"

#include <string>
#include <string_view>

namespace invol {

/// A real number known to lie in [mid - err, mid + err], where
/// mid = mantissa / 10^scale. Every operation widens err enough to keep the
/// true value inside; err is kept rounded up to a multiple of 10^-scale.
class HPReal {
 public:
  HPReal(BigInt mantissa, unsigned scale, BigRat err);

  /// Nearest-below representation of an exact rational.
  static HPReal from_rational(const BigRat& value, unsigned scale);

  const BigInt& mantissa() const { return mantissa_; }
  unsigned scale() const { return scale_; }
  const BigRat& err() const { return err_; }
  BigRat mid() const;
  BigRat lower() const { return mid() - err_; }
  BigRat upper() const { return mid() + err_; }
  /// Upper bound on |x| over the enclosure.
  BigRat magnitude_bound() const;
  bool contains(const BigRat& x) const;

  HPReal operator-() const;
  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const BigRat& r);
  friend HPReal operator/(const HPReal& a, const HPReal& b);

  /// Widens the enclosure by extra (>= 0).
  HPReal widened(const BigRat& extra) const;

  /// mid truncated toward zero to `digits` fractional decimals.
  std::string decimal(unsigned digits) const;
  /// Least e with err <= 10^e; returns -(scale+1) for an exact value.
  long err_exponent() const;

 private:
  BigRat ulp() const;
  void normalize_err();

  BigInt mantissa_;
  unsigned scale_;
  BigRat err_;
};

/// Enclosures overlap: |mid_a - mid_b| <= err_a + err_b.
bool certainly_consistent(const HPReal& a, const HPReal& b);

/// True when the whole enclosure lies in [p, p + 10^-k), where p is the
/// decimal `printed` with k fractional digits (e.g. "1.6793").
bool certainly_begins_with(const HPReal& x, std::string_view printed);

}  // namespace invol
