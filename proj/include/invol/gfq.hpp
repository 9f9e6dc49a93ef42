#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace invol {

/// GF(p^k) for the fixed table of small fields (q in {2,3,4,5,7,8,9}).
///
/// Elements are addressed by an integer code in [0, q): the coefficient tuple
/// of the polynomial representative read as a little-endian base-p number.
/// All arithmetic goes through precomputed q*q tables, which is what the
/// exhaustive matrix scans index into directly.
struct FieldDesc {
  unsigned p = 0;
  unsigned k = 0;
  unsigned q = 0;
  /// Monic modulus, little-endian coefficients, size k + 1.
  std::vector<unsigned> modulus;

  std::vector<std::uint8_t> add_table;
  std::vector<std::uint8_t> mul_table;
  std::vector<std::uint8_t> neg_table;
  std::vector<std::uint8_t> inv_table;  // inv_table[0] unused
  /// x -> x^sqrt(q); empty unless k is even.
  std::vector<std::uint8_t> frob_table;

  std::uint8_t add(unsigned a, unsigned b) const { return add_table[a * q + b]; }
  std::uint8_t mul(unsigned a, unsigned b) const { return mul_table[a * q + b]; }
  std::uint8_t sub(unsigned a, unsigned b) const { return add_table[a * q + neg_table[b]]; }

  bool has_conjugation() const { return !frob_table.empty(); }
  std::string name() const;
};

class UnsupportedField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical descriptor; the same (p,k) always yields the same object.
const FieldDesc& fq_field(unsigned p, unsigned k);
/// Lookup by field size q.
const FieldDesc& fq_field_of_size(unsigned q);

class FqElem {
 public:
  FqElem(const FieldDesc& field, unsigned code);

  static FqElem zero(const FieldDesc& f) { return FqElem(f, 0); }
  static FqElem one(const FieldDesc& f) { return FqElem(f, 1); }
  /// The class of x in GF(p)[x]/(modulus); requires k >= 2.
  static FqElem generator(const FieldDesc& f);
  static FqElem from_coeffs(const FieldDesc& f, const std::vector<unsigned>& coeffs);

  const FieldDesc& field() const { return *field_; }
  unsigned code() const { return code_; }
  std::vector<unsigned> coeffs() const;
  bool is_zero() const { return code_ == 0; }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  const FieldDesc* field_;
  unsigned code_;
};

FqElem fq_add(const FqElem& x, const FqElem& y);
FqElem fq_sub(const FqElem& x, const FqElem& y);
FqElem fq_mul(const FqElem& x, const FqElem& y);
FqElem fq_neg(const FqElem& x);
FqElem fq_inv(const FqElem& x);
FqElem fq_pow(const FqElem& x, unsigned long e);
/// x^sqrt(q) on GF(q^2); an involutive field automorphism.
FqElem fq_frobenius(const FqElem& x);
/// Absolute trace GF(p^k) -> GF(p), returned as an element of the same field.
FqElem fq_trace(const FqElem& x);
bool fq_is_square(const FqElem& x);

inline FqElem operator+(const FqElem& a, const FqElem& b) { return fq_add(a, b); }
inline FqElem operator-(const FqElem& a, const FqElem& b) { return fq_sub(a, b); }
inline FqElem operator*(const FqElem& a, const FqElem& b) { return fq_mul(a, b); }
inline FqElem operator-(const FqElem& a) { return fq_neg(a); }

}  // namespace invol
