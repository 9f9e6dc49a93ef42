#include "invol/matgroups.hpp"

#include "membership.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace invol {

namespace {

constexpr std::string_view kFamilyNames[] = {"gl", "u", "sp", "o-plus", "o-minus", "o-odd"};

BigRat product_q_power_minus_one(const BigRat& q, unsigned n, unsigned step) {
  // prod_{i=1}^{n} (q^{step*i} - 1)
  BigRat acc = 1;
  for (unsigned i = 1; i <= n; ++i) acc *= pow(q, static_cast<long>(step * i)) - 1;
  return acc;
}

BigRat order_gl(unsigned n, const BigRat& q) {
  return pow(q, static_cast<long>(n) * (n - 1) / 2) * product_q_power_minus_one(q, n, 1);
}

BigRat order_u(unsigned n, const BigRat& q) {
  BigRat acc = pow(q, static_cast<long>(n) * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) acc *= pow(q, i) - (i % 2 ? -1 : 1);
  return acc;
}

BigRat order_sp_half(unsigned n, const BigRat& q) {
  return pow(q, static_cast<long>(n) * n) * product_q_power_minus_one(q, n, 2);
}

// |O^eps(2n,q)| for n >= 1: 2 q^{n^2-n} (q^n - eps) prod_{i<n} (q^{2i}-1).
BigRat order_o_even(unsigned n, int eps, const BigRat& q) {
  return 2 * pow(q, static_cast<long>(n) * n - n) * (pow(q, n) - eps) * product_q_power_minus_one(q, n - 1, 2);
}

BigRat order_o_odd(unsigned dim, const BigRat& q) {
  const unsigned n = dim / 2;
  return 2 * order_sp_half(n, q);
}

struct FieldTables {
  const FieldDesc& f;
  std::uint8_t code(int v) const {
    // small signed integers into the prime subfield
    int p = static_cast<int>(f.p);
    return static_cast<std::uint8_t>(((v % p) + p) % p);
  }
};

std::uint8_t least_nonsquare(const FieldDesc& f) {
  for (unsigned c = 1; c < f.q; ++c)
    if (!fq_is_square(FqElem(f, c))) return static_cast<std::uint8_t>(c);
  throw std::logic_error("no non-square in " + f.name());
}

std::vector<std::uint8_t> trace_one_elements(const FieldDesc& f) {
  std::vector<std::uint8_t> out;
  for (unsigned c = 0; c < f.q; ++c)
    if (fq_trace(FqElem(f, c)).code() == 1) out.push_back(static_cast<std::uint8_t>(c));
  return out;
}

// Least delta with x^2 + xy + delta y^2 anisotropic in odd characteristic,
// i.e. 1 - 4 delta a non-square.
std::uint8_t anisotropic_delta_odd(const FieldDesc& f) {
  FqElem four = FqElem(f, 4 % f.p);
  for (unsigned c = 1; c < f.q; ++c) {
    FqElem disc = FqElem::one(f) - four * FqElem(f, c);
    if (!disc.is_zero() && !fq_is_square(disc)) return static_cast<std::uint8_t>(c);
  }
  throw std::logic_error("no anisotropic binary form over " + f.name());
}

MatFq polar_of(const MatFq& quad) {
  const auto& f = quad.field();
  const unsigned d = quad.dim();
  MatFq gram(f, d);
  for (unsigned i = 0; i < d; ++i) {
    gram.set(i, i, quad.at(i, i) + quad.at(i, i));
    for (unsigned j = i + 1; j < d; ++j) {
      gram.set(i, j, quad.at(i, j));
      gram.set(j, i, quad.at(i, j));
    }
  }
  return gram;
}

void require_anisotropic_block(const MatFq& quad, unsigned a) {
  const auto& f = quad.field();
  const unsigned xx = quad.at(a, a).code(), xy = quad.at(a, a + 1).code(), yy = quad.at(a + 1, a + 1).code();
  for (unsigned x = 0; x < f.q; ++x)
    for (unsigned y = 0; y < f.q; ++y) {
      if (x == 0 && y == 0) continue;
      unsigned v = f.add(f.add(f.mul(xx, f.mul(x, x)), f.mul(xy, f.mul(x, y))), f.mul(yy, f.mul(y, y)));
      if (v == 0) throw std::logic_error("minus-type block is isotropic");
    }
}

}  // namespace

std::string_view family_name(Family f) { return kFamilyNames[static_cast<int>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
  for (int i = 0; i < 6; ++i)
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  return std::nullopt;
}

void validate(const GroupId& g) {
  if (prime_of_power(g.q) == 0) throw std::invalid_argument("q must be a prime power");
  switch (g.family) {
    case Family::Sp:
    case Family::OPlus:
    case Family::OMinus:
      if (g.dim % 2) throw std::invalid_argument(std::string(family_name(g.family)) + " requires even dimension");
      break;
    case Family::OOdd:
      if (g.dim % 2 == 0) throw std::invalid_argument("o-odd requires odd dimension");
      if (g.q % 2 == 0)
        throw std::invalid_argument("odd-dimensional orthogonal group in even characteristic is isomorphic to "
                                    "symplectic; unsupported");
      break;
    default:
      break;
  }
}

const FieldDesc& ambient_field(const GroupId& g) {
  return fq_field_of_size(g.family == Family::U ? g.q * g.q : g.q);
}

MatFq::MatFq(const FieldDesc& field, unsigned dim) : field_(&field), dim_(dim), codes_(dim * dim, 0) {}

MatFq MatFq::identity(const FieldDesc& field, unsigned dim) {
  MatFq m(field, dim);
  for (unsigned i = 0; i < dim; ++i) m.codes_[i * dim + i] = 1;
  return m;
}

MatFq MatFq::from_codes(const FieldDesc& field, unsigned dim, std::vector<std::uint8_t> codes) {
  if (codes.size() != dim * dim) throw std::invalid_argument("entry count must be dim*dim");
  for (auto c : codes)
    if (c >= field.q) throw std::invalid_argument("entry code outside " + field.name());
  MatFq m(field, dim);
  m.codes_ = std::move(codes);
  return m;
}

MatFq MatFq::from_index(const FieldDesc& field, unsigned dim, std::uint64_t index) {
  MatFq m(field, dim);
  for (auto& c : m.codes_) {
    c = static_cast<std::uint8_t>(index % field.q);
    index /= field.q;
  }
  return m;
}

void MatFq::set(unsigned i, unsigned j, const FqElem& v) {
  if (&v.field() != field_) throw FieldMismatch("field mismatch");
  codes_[i * dim_ + j] = static_cast<std::uint8_t>(v.code());
}

std::uint64_t MatFq::index() const {
  std::uint64_t idx = 0;
  for (auto it = codes_.rbegin(); it != codes_.rend(); ++it) idx = idx * field_->q + *it;
  return idx;
}

MatFq operator*(const MatFq& a, const MatFq& b) {
  if (&a.field() != &b.field()) throw FieldMismatch("field mismatch");
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const auto& f = a.field();
  const unsigned d = a.dim();
  std::vector<std::uint8_t> out(d * d);
  auto ac = a.codes(), bc = b.codes();
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      unsigned acc = 0;
      for (unsigned k = 0; k < d; ++k) acc = f.add(acc, f.mul(ac[i * d + k], bc[k * d + j]));
      out[i * d + j] = static_cast<std::uint8_t>(acc);
    }
  return MatFq::from_codes(f, d, std::move(out));
}

MatFq transpose(const MatFq& m) {
  MatFq t(m.field(), m.dim());
  for (unsigned i = 0; i < m.dim(); ++i)
    for (unsigned j = 0; j < m.dim(); ++j) t.set(j, i, m.at(i, j));
  return t;
}

MatFq conjugate(const MatFq& m) {
  MatFq c(m.field(), m.dim());
  for (unsigned i = 0; i < m.dim(); ++i)
    for (unsigned j = 0; j < m.dim(); ++j) c.set(i, j, fq_frobenius(m.at(i, j)));
  return c;
}

FormSpec canonical_form(const GroupId& g, FormVariant variant) {
  validate(g);
  const FieldDesc& f = ambient_field(g);
  const unsigned d = g.dim;
  const FieldTables t{f};
  FormSpec form;
  switch (g.family) {
    case Family::GL:
      form.kind = FormKind::None;
      return form;
    case Family::U:
      form.kind = FormKind::Hermitian;
      form.gram = MatFq::identity(f, d);
      return form;
    case Family::Sp: {
      form.kind = FormKind::Symplectic;
      MatFq gram(f, d);
      for (unsigned i = 0; i + 1 < d; i += 2) {
        gram.set(i, i + 1, FqElem(f, t.code(1)));
        gram.set(i + 1, i, FqElem(f, t.code(-1)));
      }
      form.gram = gram;
      return form;
    }
    case Family::OPlus:
    case Family::OMinus:
    case Family::OOdd:
      break;
  }

  if (g.family == Family::OMinus && d == 0) throw std::invalid_argument("o-minus requires dimension >= 2");
  MatFq quad(f, d);
  const unsigned pairs = d / 2;
  const unsigned hyperbolic = g.family == Family::OMinus ? pairs - 1 : pairs;
  for (unsigned i = 0; i < hyperbolic; ++i) quad.set(2 * i, 2 * i + 1, FqElem::one(f));
  const bool odd_q = f.p != 2;

  if (g.family == Family::OPlus) {
    form.kind = FormKind::QuadraticPlus;
  } else if (g.family == Family::OOdd) {
    form.kind = FormKind::QuadraticOddDim;
    // x_{2n+1}^2, or alpha x_{2n+1}^2 in the alternate model
    quad.set(d - 1, d - 1, variant == FormVariant::Canonical ? FqElem::one(f) : FqElem(f, least_nonsquare(f)));
  } else {
    form.kind = FormKind::QuadraticMinus;
    const unsigned a = d - 2, b = d - 1;
    quad.set(a, a, FqElem::one(f));
    if (odd_q && variant == FormVariant::Canonical) {
      // x^2 - alpha y^2
      quad.set(b, b, fq_neg(FqElem(f, least_nonsquare(f))));
    } else {
      // x^2 + xy + delta y^2
      std::uint8_t delta;
      if (odd_q) {
        delta = anisotropic_delta_odd(f);
      } else {
        auto candidates = trace_one_elements(f);
        delta = variant == FormVariant::Canonical ? candidates.front() : candidates.back();
      }
      quad.set(a, b, FqElem::one(f));
      quad.set(b, b, FqElem(f, delta));
    }
    require_anisotropic_block(quad, a);
  }
  form.gram = polar_of(quad);
  form.quad = quad;
  return form;
}

FqElem quadratic_value(const FormSpec& form, std::span<const FqElem> x) {
  if (!form.quad) throw std::invalid_argument("form has no quadratic part");
  const MatFq& c = *form.quad;
  if (x.size() != c.dim()) throw std::invalid_argument("vector length mismatch");
  FqElem acc = FqElem::zero(c.field());
  for (unsigned i = 0; i < c.dim(); ++i)
    for (unsigned j = i; j < c.dim(); ++j) acc = acc + c.at(i, j) * x[i] * x[j];
  return acc;
}

bool is_member(const GroupId& g, const MatFq& m) { return is_member(g, canonical_form(g), m); }

bool is_member(const GroupId& g, const FormSpec& form, const MatFq& m) {
  validate(g);
  if (m.dim() != g.dim) throw std::invalid_argument("matrix dimension does not match group");
  if (&m.field() != &ambient_field(g)) throw FieldMismatch("matrix is not over " + ambient_field(g).name());
  detail::MembershipKernel kernel(g, form);
  return kernel.member(m.codes().data());
}

BigRat order_formula(Family family, unsigned dim, const BigRat& q) {
  switch (family) {
    case Family::GL:
      return order_gl(dim, q);
    case Family::U:
      return order_u(dim, q);
    case Family::Sp:
      if (dim % 2) throw std::invalid_argument("sp requires even dimension");
      return order_sp_half(dim / 2, q);
    case Family::OOdd:
      if (dim % 2 == 0) throw std::invalid_argument("o-odd requires odd dimension");
      return order_o_odd(dim, q);
    case Family::OPlus:
    case Family::OMinus: {
      if (dim % 2) return order_o_odd(dim, q);
      if (dim == 0) {
        if (family == Family::OPlus) return 1;
        throw std::domain_error("order undefined; reciprocal is zero by convention");
      }
      return order_o_even(dim / 2, family == Family::OPlus ? 1 : -1, q);
    }
  }
  throw std::logic_error("unknown family");
}

BigRat reciprocal_order(Family family, unsigned dim, const BigRat& q) {
  if (family == Family::OMinus && dim == 0) return 0;
  return 1 / order_formula(family, dim, q);
}

BigInt group_order(const GroupId& g) {
  if (g.family == Family::OMinus && g.dim == 0)
    throw std::domain_error("order undefined; reciprocal is zero by convention");
  validate(g);
  BigRat r = order_formula(g.family, g.dim, BigRat(g.q));
  return r.get_num();
}

OracleInfeasible::OracleInfeasible(const BigInt& required, const BigInt& budget)
    : std::runtime_error("oracle infeasible at this size: " + required.get_str() + " matrices to scan, budget " +
                         budget.get_str()),
      required_(required) {}

BigInt default_oracle_budget() { return BigInt(1) << 26; }

BigInt oracle_space_size(const GroupId& g) {
  return pow(BigInt(ambient_field(g).q), static_cast<unsigned long>(g.dim) * g.dim);
}

Census oracle_scan_range(const GroupId& g, const FormSpec& form, std::uint64_t begin, std::uint64_t end) {
  detail::MembershipKernel kernel(g, form);
  const unsigned q = kernel.field_size();
  const unsigned cells = g.dim * g.dim;
  std::uint64_t order = 0, involutions = 0;
  if (cells == 0) {
    // the 0x0 matrix is the identity of the trivial group
    if (begin == 0 && end > 0) return {1, 1};
    return {0, 0};
  }
  std::vector<std::uint8_t> m(cells);
  std::uint64_t rest = begin;
  for (auto& c : m) {
    c = static_cast<std::uint8_t>(rest % q);
    rest /= q;
  }
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (kernel.member(m.data())) {
      ++order;
      if (kernel.squares_to_identity(m.data())) ++involutions;
    }
    for (unsigned t = 0; t < cells; ++t) {
      if (++m[t] < q) break;
      m[t] = 0;
    }
  }
  return {BigInt(static_cast<unsigned long>(order)), BigInt(static_cast<unsigned long>(involutions))};
}

Census oracle_census(const GroupId& g, const OracleOptions& options) {
  validate(g);
  const BigInt space = oracle_space_size(g);
  if (space > options.budget || !space.fits_ulong_p()) throw OracleInfeasible(space, options.budget);
  const std::uint64_t total = space.get_ui();
  const FormSpec form = canonical_form(g, options.variant);

  const unsigned threads = std::max(1u, options.threads);
  std::uint64_t chunks = options.chunks ? options.chunks : threads * 4ull;
  chunks = std::clamp<std::uint64_t>(chunks, 1, total);
  std::vector<Census> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t lo = total / chunks * c + std::min(c, total % chunks);
      const std::uint64_t hi = lo + total / chunks + (c < total % chunks ? 1 : 0);
      partial[c] = oracle_scan_range(g, form, lo, hi);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  Census out{0, 0};
  for (const auto& p : partial) {
    out.order += p.order;
    out.involutions += p.involutions;
  }
  return out;
}

}  // namespace invol
