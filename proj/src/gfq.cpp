#include "invol/gfq.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace invol {

namespace {

using Poly = std::vector<unsigned>;

std::vector<unsigned> decode(unsigned code, unsigned p, unsigned k) {
  std::vector<unsigned> c(k);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

unsigned encode(const std::vector<unsigned>& c, unsigned p) {
  unsigned code = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * p + *it;
  return code;
}

// Product of two reduced residues modulo the monic modulus.
std::vector<unsigned> poly_mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                  const Poly& modulus, unsigned p) {
  const unsigned k = static_cast<unsigned>(modulus.size()) - 1;
  std::vector<unsigned> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    unsigned lead = prod[d];
    if (lead == 0) continue;
    // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
    for (unsigned i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - lead) * modulus[i]) % p;
    prod[d] = 0;
  }
  prod.resize(k);
  return prod;
}

bool has_root(const Poly& poly, unsigned p) {
  for (unsigned x = 0; x < p; ++x) {
    unsigned v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::unique_ptr<FieldDesc> build(unsigned p, unsigned k, Poly modulus) {
  if (!is_prime(p) || k == 0 || modulus.size() != k + 1 || modulus.back() != 1)
    throw UnsupportedField("unsupported field: bad parameters");
  // Degree <= 3: irreducible iff no root in GF(p).
  if (k >= 2 && has_root(modulus, p)) throw UnsupportedField("unsupported field: reducible modulus");

  auto f = std::make_unique<FieldDesc>();
  f->p = p;
  f->k = k;
  f->modulus = std::move(modulus);
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  f->q = q;

  f->add_table.resize(q * q);
  f->mul_table.resize(q * q);
  f->neg_table.resize(q);
  f->inv_table.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto ca = decode(a, p, k);
    std::vector<unsigned> n(k);
    for (unsigned i = 0; i < k; ++i) n[i] = (p - ca[i]) % p;
    f->neg_table[a] = static_cast<std::uint8_t>(encode(n, p));
    for (unsigned b = 0; b < q; ++b) {
      auto cb = decode(b, p, k);
      std::vector<unsigned> s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
      f->add_table[a * q + b] = static_cast<std::uint8_t>(encode(s, p));
      f->mul_table[a * q + b] =
          static_cast<std::uint8_t>(k == 1 ? (a * b) % p : encode(poly_mulmod(ca, cb, f->modulus, p), p));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (f->mul_table[a * q + b] == 1) f->inv_table[a] = static_cast<std::uint8_t>(b);

  if (k % 2 == 0) {
    unsigned root = 1;
    for (unsigned i = 0; i < k / 2; ++i) root *= p;
    f->frob_table.resize(q);
    for (unsigned a = 0; a < q; ++a) {
      unsigned v = 1;
      for (unsigned i = 0; i < root; ++i) v = f->mul_table[v * q + a];
      f->frob_table[a] = static_cast<std::uint8_t>(v);
    }
  }
  return f;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FieldDesc>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

Poly canonical_modulus(unsigned p, unsigned k) {
  if (k == 1 && (p == 2 || p == 3 || p == 5 || p == 7)) return {0, 1};
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  throw UnsupportedField("unsupported field GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
}

const FieldDesc& same_field(const FqElem& x, const FqElem& y) {
  if (&x.field() != &y.field()) throw FieldMismatch("field mismatch");
  return x.field();
}

}  // namespace

std::string FieldDesc::name() const { return "GF(" + std::to_string(q) + ")"; }

const FieldDesc& fq_field(unsigned p, unsigned k) {
  Poly modulus = canonical_modulus(p, k);
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.fields[{p, k}];
  if (!slot) slot = build(p, k, std::move(modulus));
  return *slot;
}

const FieldDesc& fq_field_of_size(unsigned q) {
  switch (q) {
    case 2: return fq_field(2, 1);
    case 3: return fq_field(3, 1);
    case 4: return fq_field(2, 2);
    case 5: return fq_field(5, 1);
    case 7: return fq_field(7, 1);
    case 8: return fq_field(2, 3);
    case 9: return fq_field(3, 2);
    default: throw UnsupportedField("unsupported field of size " + std::to_string(q));
  }
}

FqElem::FqElem(const FieldDesc& field, unsigned code) : field_(&field), code_(code) {
  if (code >= field.q) throw std::out_of_range("element code out of range for " + field.name());
}

FqElem FqElem::generator(const FieldDesc& f) {
  if (f.k < 2) throw std::invalid_argument("prime field has no polynomial generator");
  return FqElem(f, f.p);
}

FqElem FqElem::from_coeffs(const FieldDesc& f, const std::vector<unsigned>& coeffs) {
  if (coeffs.size() != f.k) throw std::invalid_argument("coefficient count must equal extension degree");
  for (unsigned c : coeffs)
    if (c >= f.p) throw std::invalid_argument("coefficient not reduced mod p");
  return FqElem(f, encode(coeffs, f.p));
}

std::vector<unsigned> FqElem::coeffs() const { return decode(code_, field_->p, field_->k); }

FqElem fq_add(const FqElem& x, const FqElem& y) {
  const auto& f = same_field(x, y);
  return FqElem(f, f.add(x.code(), y.code()));
}

FqElem fq_sub(const FqElem& x, const FqElem& y) {
  const auto& f = same_field(x, y);
  return FqElem(f, f.sub(x.code(), y.code()));
}

FqElem fq_mul(const FqElem& x, const FqElem& y) {
  const auto& f = same_field(x, y);
  return FqElem(f, f.mul(x.code(), y.code()));
}

FqElem fq_neg(const FqElem& x) { return FqElem(x.field(), x.field().neg_table[x.code()]); }

FqElem fq_inv(const FqElem& x) {
  if (x.is_zero()) throw std::domain_error("division by zero in " + x.field().name());
  return FqElem(x.field(), x.field().inv_table[x.code()]);
}

FqElem fq_pow(const FqElem& x, unsigned long e) {
  FqElem acc = FqElem::one(x.field());
  FqElem base = x;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FqElem fq_frobenius(const FqElem& x) {
  const auto& f = x.field();
  if (!f.has_conjugation()) throw std::invalid_argument("no conjugation on " + f.name());
  return FqElem(f, f.frob_table[x.code()]);
}

FqElem fq_trace(const FqElem& x) {
  FqElem acc = FqElem::zero(x.field());
  FqElem term = x;
  for (unsigned i = 0; i < x.field().k; ++i) {
    acc = acc + term;
    term = fq_pow(term, x.field().p);
  }
  return acc;
}

bool fq_is_square(const FqElem& x) {
  const auto& f = x.field();
  for (unsigned c = 0; c < f.q; ++c)
    if (f.mul(c, c) == x.code()) return true;
  return false;
}

}  // namespace invol
