#include "invol/counts.hpp"

#include <stdexcept>

namespace invol {

namespace {

BigRat rec(Family f, unsigned dim, const BigRat& q) { return reciprocal_order(f, dim, q); }

void check_shape(Family family, unsigned dim, Characteristic ch) {
  switch (family) {
    case Family::Sp:
    case Family::OPlus:
      if (dim % 2) throw std::invalid_argument("even dimension required");
      break;
    case Family::OMinus:
      if (dim % 2 || dim == 0) throw std::invalid_argument("o-minus requires even dimension >= 2");
      break;
    case Family::OOdd:
      if (dim % 2 == 0) throw std::invalid_argument("o-odd requires odd dimension");
      if (ch == Characteristic::Even)
        throw std::invalid_argument("odd-dimensional orthogonal group in even characteristic is unsupported");
      break;
    default:
      break;
  }
}

// Even characteristic GL/U: sum over r <= n/2 of
// |G(n)| / (q^{r(2n-3r)} |G(r)| |G(n-2r)|).
std::vector<Summand> linear_even(Family f, unsigned n, const BigRat& q) {
  const BigRat order = order_formula(f, n, q);
  std::vector<Summand> out;
  for (unsigned r = 0; 2 * r <= n; ++r) {
    const long e = static_cast<long>(r) * (2 * static_cast<long>(n) - 3 * static_cast<long>(r));
    out.push_back({'A', r, order * rec(f, r, q) * rec(f, n - 2 * r, q) / pow(q, e)});
  }
  return out;
}

std::vector<Summand> linear_odd(Family f, unsigned n, const BigRat& q) {
  const BigRat order = order_formula(f, n, q);
  std::vector<Summand> out;
  for (unsigned r = 0; r <= n; ++r) out.push_back({'A', r, order * rec(f, r, q) * rec(f, n - r, q)});
  return out;
}

std::vector<Summand> symplectic_odd(unsigned n, const BigRat& q) {
  const BigRat order = order_formula(Family::Sp, 2 * n, q);
  std::vector<Summand> out;
  for (unsigned r = 0; r <= n; ++r)
    out.push_back({'A', r, order * rec(Family::Sp, 2 * r, q) * rec(Family::Sp, 2 * n - 2 * r, q)});
  return out;
}

// Centralizer orders of the involution classes of Sp(2n,q), q even:
// A_r (r even, alternating h), B_r (r even, non-alternating), C_r (r odd).
std::vector<Summand> symplectic_even(unsigned n, const BigRat& q) {
  const BigRat order = order_formula(Family::Sp, 2 * n, q);
  std::vector<Summand> out;
  for (unsigned r = 0; r <= n; ++r) {
    const long radical = static_cast<long>(r) * (r + 1) / 2 + static_cast<long>(r) * (2 * n - 2 * r);
    const BigRat rest = rec(Family::Sp, 2 * n - 2 * r, q);
    if (r % 2 == 0) out.push_back({'A', r, order * rest * rec(Family::Sp, r, q) / pow(q, radical)});
    if (r >= 2 && r % 2 == 0)
      out.push_back({'B', r, order * rest * rec(Family::Sp, r - 2, q) / pow(q, radical + r - 1)});
    if (r % 2 == 1) out.push_back({'C', r, order * rest * rec(Family::Sp, r - 1, q) / pow(q, radical)});
  }
  return out;
}

// Odd characteristic: V = V_1 + V_{-1}, both nondegenerate; the type of
// V_1 fixes the type of V_{-1}. first/second pick the type pairing.
std::vector<Summand> orthogonal_odd(Family f, unsigned dim, const BigRat& q) {
  const BigRat order = order_formula(f, dim, q);
  Family first_lo = Family::OPlus, first_hi = Family::OPlus;
  Family second_lo = Family::OMinus, second_hi = Family::OMinus;
  // dim 0 only reaches here for O+, whose second sum is empty
  unsigned first_end = dim, second_begin = 1, second_end = dim == 0 ? 0 : dim - 1;
  if (f == Family::OMinus) {
    first_hi = Family::OMinus;
    second_hi = Family::OPlus;
    first_end = dim - 1;
    second_end = dim;
  }
  std::vector<Summand> out;
  for (unsigned r = 0; r <= first_end; ++r)
    out.push_back({'1', r, order * rec(first_lo, r, q) * rec(first_hi, dim - r, q)});
  for (unsigned r = second_begin; r <= second_end; ++r)
    out.push_back({'2', r, order * rec(second_lo, r, q) * rec(second_hi, dim - r, q)});
  return out;
}

std::vector<Summand> orthogonal_even(Family f, unsigned n, const BigRat& q) {
  const BigRat order = order_formula(f, 2 * n, q);
  const bool minus = f == Family::OMinus;
  std::vector<Summand> out;
  for (unsigned r = 0; r <= n; ++r) {
    const long span = static_cast<long>(2 * n - 2 * r);
    const long rl = r;
    const BigRat sp_rest = rec(Family::Sp, 2 * n - 2 * r, q);
    if (r % 2 == 0 && (!minus || r + 1 <= n)) {
      const long e = rl * (rl - 1) / 2 + rl * span;
      out.push_back({'A', r, order * rec(Family::Sp, r, q) * rec(f, 2 * n - 2 * r, q) / pow(q, e)});
    }
    if (r >= 2 && r % 2 == 0) {
      const long e = rl * (rl + 1) / 2 + (rl - 1) * span - 1;
      out.push_back({'B', r, order * rec(Family::Sp, r - 2, q) * sp_rest / (2 * pow(q, e))});
    }
    if (r % 2 == 1) {
      const long e = rl * (rl - 1) / 2 + (rl - 1) * span;
      out.push_back({'C', r, order * rec(Family::Sp, r - 1, q) * sp_rest / (2 * pow(q, e))});
    }
  }
  return out;
}

}  // namespace

Characteristic characteristic_of(unsigned q) { return q % 2 ? Characteristic::Odd : Characteristic::Even; }

std::vector<Summand> involution_summands(Family family, unsigned dim, const BigRat& q, Characteristic ch) {
  check_shape(family, dim, ch);
  const bool even = ch == Characteristic::Even;
  switch (family) {
    case Family::GL:
    case Family::U:
      return even ? linear_even(family, dim, q) : linear_odd(family, dim, q);
    case Family::Sp:
      return even ? symplectic_even(dim / 2, q) : symplectic_odd(dim / 2, q);
    case Family::OPlus:
    case Family::OMinus:
      return even ? orthogonal_even(family, dim / 2, q) : orthogonal_odd(family, dim, q);
    case Family::OOdd:
      return orthogonal_odd(family, dim, q);
  }
  throw std::logic_error("unknown family");
}

BigRat involution_formula(Family family, unsigned dim, const BigRat& q, Characteristic ch) {
  BigRat total = 0;
  for (const auto& s : involution_summands(family, dim, q, ch)) total += s.value;
  return total;
}

BigInt count_involutions(const GroupId& g) {
  validate(g);
  if (g.family == Family::OMinus && g.dim == 0) throw std::invalid_argument("o-minus requires dimension >= 2");
  BigRat v = involution_formula(g.family, g.dim, BigRat(g.q), characteristic_of(g.q));
  if (!is_integer(v)) throw std::logic_error("non-integral involution count");
  return v.get_num();
}

unsigned family_parameter(Family family, unsigned dim) {
  switch (family) {
    case Family::GL:
    case Family::U:
      return dim;
    default:
      return dim / 2;
  }
}

unsigned matrix_dim(Family family, unsigned n) {
  switch (family) {
    case Family::GL:
    case Family::U:
      return n;
    case Family::OOdd:
      return 2 * n + 1;
    default:
      return 2 * n;
  }
}

unsigned normalization_exponent(Family family, unsigned dim, Characteristic ch) {
  check_shape(family, dim, ch);
  const unsigned n = family_parameter(family, dim);
  switch (family) {
    case Family::GL:
    case Family::U:
      return n * n / 2;
    case Family::Sp:
      if (ch == Characteristic::Even) return n * n + n;
      return n % 2 == 0 ? n * n : n * n - 1;
    case Family::OPlus:
    case Family::OMinus:
      return n * n;
    case Family::OOdd:
      return n * n + n;
  }
  throw std::logic_error("unknown family");
}

unsigned normalization_exponent(const GroupId& g) {
  validate(g);
  return normalization_exponent(g.family, g.dim, characteristic_of(g.q));
}

std::vector<NormalizedRatio> ratio_table(Family family, const BigRat& q, Characteristic ch, unsigned n_max,
                                         ParityFilter parity) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  std::vector<NormalizedRatio> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (parity == ParityFilter::Even && n % 2) continue;
    if (parity == ParityFilter::Odd && n % 2 == 0) continue;
    const unsigned dim = matrix_dim(family, n);
    const unsigned d = normalization_exponent(family, dim, ch);
    out.push_back({n, involution_formula(family, dim, q, ch) / pow(q, static_cast<long>(d)), d});
  }
  return out;
}

}  // namespace invol
