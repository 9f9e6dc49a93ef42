#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invol {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// r^e for any integer e; throws std::domain_error on 0^(negative).
BigRat pow(const BigRat& r, long e);
BigInt pow(const BigInt& b, unsigned long e);

/// Parses "p/r" or a plain (possibly signed) integer.
BigRat parse_rational(std::string_view text);

/// Lossless "num/den" form; integers keep the "/1" suffix.
std::string to_fraction_string(const BigRat& r);
std::string to_decimal_string(const BigInt& n);

bool is_integer(const BigRat& r);

/// Prime-power test for small positive integers; returns the prime or 0.
unsigned prime_of_power(unsigned long n);

}  // namespace invol
