#include "invol/numeric.hpp"

#include <stdexcept>

namespace invol {

BigRat pow(const BigRat& r, long e) {
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero raised to a negative power");
    BigRat inv = 1 / r;
    return pow(inv, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

BigInt pow(const BigInt& b, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + part);
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return BigRat(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

std::string to_fraction_string(const BigRat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const BigInt& n) { return n.get_str(); }

bool is_integer(const BigRat& r) { return r.get_den() == 1; }

unsigned prime_of_power(unsigned long n) {
  if (n < 2) return 0;
  unsigned long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  return n == 1 ? static_cast<unsigned>(p) : 0;
}

}  // namespace invol
