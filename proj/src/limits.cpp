#include "invol/limits.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace invol {

namespace {

BigRat abs_rat(const BigRat& r) { return r < 0 ? BigRat(-r) : r; }

BigRat ten_neg(unsigned e) {
  BigRat r(BigInt(1), pow(BigInt(10), e));
  return r;
}

HPReal one_at(unsigned scale) { return HPReal(pow(BigInt(10), scale), scale, 0); }

void check_rho(const BigRat& rho) {
  if (rho == 0 || abs_rat(rho) >= 1) throw std::domain_error("product base must satisfy 0 < |rho| < 1");
}

// Shared loop: factor(rho^i) returns 1 + sign c rho^i; c_bound bounds |c|.
template <class Factor>
HPReal certified_product(const BigRat& rho, const BigRat& c_bound, unsigned digits, Factor factor) {
  check_rho(rho);
  const unsigned scale = working_scale(digits);
  const BigRat eps = ten_neg(digits + 6);
  const BigRat r = abs_rat(rho);
  HPReal p = one_at(scale);
  BigRat power = rho;
  BigRat abs_power = r;
  unsigned i = 1;
  BigRat tail = c_bound * abs_power / (1 - r);
  while (tail > eps) {
    p = p * factor(power);
    power *= rho;
    abs_power *= r;
    ++i;
    tail = c_bound * abs_power / (1 - r);
  }
  if (tail == 0) return p;
  return p.widened(p.magnitude_bound() * 2 * tail);
}

}  // namespace

unsigned working_scale(unsigned digits) { return digits + 10; }

HPReal hp_product(const BigRat& c, const BigRat& rho, ProductSign sign, unsigned digits) {
  const unsigned scale = working_scale(digits);
  const int s = static_cast<int>(sign);
  return certified_product(rho, abs_rat(c), digits, [&](const BigRat& power) {
    return HPReal::from_rational(1 + s * c * power, scale);
  });
}

HPReal hp_product(const HPReal& c, const BigRat& rho, ProductSign sign, unsigned digits) {
  const unsigned scale = working_scale(digits);
  if (c.scale() != scale) throw std::invalid_argument("coefficient scale does not match requested digits");
  const HPReal one = one_at(scale);
  return certified_product(rho, c.magnitude_bound(), digits, [&](const BigRat& power) {
    return sign == ProductSign::Plus ? one + c * power : one - c * power;
  });
}

HPReal hp_sqrt(const BigRat& x, unsigned digits) {
  if (x <= 0) throw std::domain_error("square root of a non-positive number");
  const unsigned scale = working_scale(digits);
  const BigInt unit2 = pow(BigInt(10), 2 * scale);
  const BigRat target = x * BigRat(unit2);
  BigInt n;
  mpz_fdiv_q(n.get_mpz_t(), target.get_num().get_mpz_t(), target.get_den().get_mpz_t());
  BigInt m;
  mpz_sqrt(m.get_mpz_t(), n.get_mpz_t());
  // sqrt(x) * 10^scale lies in [m, m+1)
  if (!(m * m <= n && n < (m + 1) * (m + 1))) throw std::logic_error("integer square root residual check failed");
  const bool exact = m * m == n && target == BigRat(n);
  return HPReal(m, scale, exact ? BigRat(0) : ten_neg(scale));
}

const std::vector<LimitTag>& all_limit_tags() {
  static const std::vector<LimitTag> tags = {
      LimitTag::GlEvenQEvenN, LimitTag::GlEvenQOddN, LimitTag::GlOddQEvenN, LimitTag::GlOddQOddN,
      LimitTag::UEvenQEvenN,  LimitTag::UEvenQOddN,  LimitTag::UOddQEvenN,  LimitTag::UOddQOddN,
      LimitTag::SpOddQEvenN,  LimitTag::SpOddQOddN,  LimitTag::SpEvenQ,     LimitTag::OPmOddQ,
      LimitTag::OOddDimOddQ,  LimitTag::OPmEvenQ,
  };
  return tags;
}

std::string limit_tag_name(LimitTag tag) {
  switch (tag) {
    case LimitTag::GlEvenQEvenN: return "gl-even-q-even-n";
    case LimitTag::GlEvenQOddN: return "gl-even-q-odd-n";
    case LimitTag::GlOddQEvenN: return "gl-odd-q-even-n";
    case LimitTag::GlOddQOddN: return "gl-odd-q-odd-n";
    case LimitTag::UEvenQEvenN: return "u-even-q-even-n";
    case LimitTag::UEvenQOddN: return "u-even-q-odd-n";
    case LimitTag::UOddQEvenN: return "u-odd-q-even-n";
    case LimitTag::UOddQOddN: return "u-odd-q-odd-n";
    case LimitTag::SpOddQEvenN: return "sp-odd-q-even-n";
    case LimitTag::SpOddQOddN: return "sp-odd-q-odd-n";
    case LimitTag::SpEvenQ: return "sp-even-q";
    case LimitTag::OPmOddQ: return "o-pm-odd-q";
    case LimitTag::OOddDimOddQ: return "o-odd-dim-odd-q";
    case LimitTag::OPmEvenQ: return "o-pm-even-q";
  }
  return "?";
}

std::optional<LimitTag> parse_limit_tag(std::string_view name) {
  for (LimitTag t : all_limit_tags())
    if (limit_tag_name(t) == name) return t;
  return std::nullopt;
}

LimitShape limit_shape(LimitTag tag) {
  using C = Characteristic;
  using P = ParityFilter;
  switch (tag) {
    case LimitTag::GlEvenQEvenN: return {Family::GL, C::Even, P::Even, 1, true};
    case LimitTag::GlEvenQOddN: return {Family::GL, C::Even, P::Odd, 1, true};
    case LimitTag::GlOddQEvenN: return {Family::GL, C::Odd, P::Even, 1, true};
    case LimitTag::GlOddQOddN: return {Family::GL, C::Odd, P::Odd, 2, true};
    case LimitTag::UEvenQEvenN: return {Family::U, C::Even, P::Even, 1, true};
    case LimitTag::UEvenQOddN: return {Family::U, C::Even, P::Odd, 1, true};
    case LimitTag::UOddQEvenN: return {Family::U, C::Odd, P::Even, 1, true};
    case LimitTag::UOddQOddN: return {Family::U, C::Odd, P::Odd, 2, true};
    case LimitTag::SpOddQEvenN: return {Family::Sp, C::Odd, P::Even, 1, true};
    case LimitTag::SpOddQOddN: return {Family::Sp, C::Odd, P::Odd, 2, true};
    case LimitTag::SpEvenQ: return {Family::Sp, C::Even, P::All, 1, false};
    case LimitTag::OPmOddQ: return {Family::OPlus, C::Odd, P::All, 1, false};
    case LimitTag::OOddDimOddQ: return {Family::OOdd, C::Odd, P::All, 2, false};
    case LimitTag::OPmEvenQ: return {Family::OPlus, C::Even, P::All, 1, false};
  }
  throw std::invalid_argument("unknown limit tag");
}

namespace {

void check_case(const LimitCase& c, unsigned digits) {
  if (c.q <= 1) throw std::domain_error("limit constants need q > 1");
  if (digits < 10) throw std::invalid_argument("at least 10 digits are required");
}

BigRat qpow(const BigRat& q, long e) { return pow(q, e); }

HPReal half(const HPReal& x) { return x * BigRat(1, 2); }

// prod_{i>=1} (1 + s y_i) with s^2 = d = -q and y_i = d^-i, as a + b s.
std::pair<HPReal, HPReal> unitary_pair_product(const BigRat& q, unsigned digits) {
  const unsigned scale = working_scale(digits);
  const BigRat d = -q;
  const BigRat inv_q = 1 / q;
  const BigRat eps = ten_neg(digits + 6);
  const BigRat sqrt_q_bound = (q + 1) / 2;
  HPReal a = one_at(scale);
  HPReal b(0, scale, 0);
  BigRat y = 1 / d;
  BigRat abs_y = inv_q;
  BigRat tail = sqrt_q_bound * abs_y / (1 - inv_q);
  while (tail > eps) {
    HPReal a_next = a + b * (d * y);
    HPReal b_next = a * y + b;
    a = std::move(a_next);
    b = std::move(b_next);
    y /= d;
    abs_y *= inv_q;
    tail = sqrt_q_bound * abs_y / (1 - inv_q);
  }
  // |a + b s| <= |a| + |b| sqrt(q); the tail moves each coordinate by at most that times 2T
  const BigRat widen = (a.magnitude_bound() + b.magnitude_bound() * sqrt_q_bound) * 2 * tail;
  return {a.widened(widen), b.widened(widen)};
}

HPReal gl_sum_form(const BigRat& q, bool odd_q, bool odd_n, unsigned digits) {
  const HPReal s = hp_sqrt(q, digits);
  HPReal plus = hp_product(s, 1 / q, ProductSign::Plus, digits);
  HPReal minus = hp_product(s, 1 / q, ProductSign::Minus, digits);
  if (odd_q) {
    plus = plus * plus;
    minus = minus * minus;
  }
  if (!odd_n) return half(plus + minus);
  return half(s * (plus - minus));
}

HPReal u_sum_form(const BigRat& q, bool odd_q, bool odd_n, unsigned digits) {
  auto [a, b] = unitary_pair_product(q, digits);
  const BigRat d = -q;
  if (!odd_q) return odd_n ? b * d : a;
  if (!odd_n) return a * a + (b * b) * d;
  return (a * b) * (2 * d);
}

HPReal sp_odd_sum_form(const BigRat& q, bool odd_n, unsigned digits) {
  const BigRat rho = 1 / (q * q);
  HPReal plus = hp_product(q, rho, ProductSign::Plus, digits);
  HPReal minus = hp_product(q, rho, ProductSign::Minus, digits);
  plus = plus * plus;
  minus = minus * minus;
  if (!odd_n) return half(plus + minus);
  return half(plus - minus) * q;
}

HPReal single_form(LimitTag tag, const BigRat& q, unsigned digits) {
  const BigRat rho = 1 / (q * q);
  switch (tag) {
    case LimitTag::SpEvenQ: return hp_product(1, rho, ProductSign::Plus, digits);
    case LimitTag::OPmOddQ: {
      HPReal p = hp_product(q, rho, ProductSign::Plus, digits);
      return p * p;
    }
    case LimitTag::OOddDimOddQ: {
      HPReal p = hp_product(1, rho, ProductSign::Plus, digits);
      return (p * p) * BigRat(2);
    }
    case LimitTag::OPmEvenQ: return hp_product(q, rho, ProductSign::Plus, digits);
    default: break;
  }
  throw std::logic_error("tag has two forms");
}

}  // namespace

HPReal limit_constant(const LimitCase& c, unsigned digits) {
  check_case(c, digits);
  const BigRat& q = c.q;
  switch (c.tag) {
    case LimitTag::GlEvenQEvenN: return gl_sum_form(q, false, false, digits);
    case LimitTag::GlEvenQOddN: return gl_sum_form(q, false, true, digits);
    case LimitTag::GlOddQEvenN: return gl_sum_form(q, true, false, digits);
    case LimitTag::GlOddQOddN: return gl_sum_form(q, true, true, digits);
    case LimitTag::UEvenQEvenN: return u_sum_form(q, false, false, digits);
    case LimitTag::UEvenQOddN: return u_sum_form(q, false, true, digits);
    case LimitTag::UOddQEvenN: return u_sum_form(q, true, false, digits);
    case LimitTag::UOddQOddN: return u_sum_form(q, true, true, digits);
    case LimitTag::SpOddQEvenN: return sp_odd_sum_form(q, false, digits);
    case LimitTag::SpOddQOddN: return sp_odd_sum_form(q, true, digits);
    default: return single_form(c.tag, q, digits);
  }
}

HPReal limit_constant_alt(const LimitCase& c, unsigned digits) {
  check_case(c, digits);
  const BigRat& q = c.q;
  constexpr auto P = ProductSign::Plus;
  constexpr auto M = ProductSign::Minus;
  auto prod = [&](const BigRat& coef, long rho_exp, ProductSign sign) {
    return hp_product(coef, qpow(q, rho_exp), sign, digits);
  };
  switch (c.tag) {
    case LimitTag::GlEvenQEvenN:
      return prod(qpow(q, 5), -8, P) * prod(qpow(q, 3), -8, P) * prod(1, -8, M) / prod(1, -2, M);
    case LimitTag::GlEvenQOddN:
      return prod(qpow(q, 7), -8, P) * prod(q, -8, P) * prod(1, -8, M) / prod(1, -2, M);
    case LimitTag::GlOddQEvenN: {
      HPReal p = prod(q * q, -4, P);
      return p * p * prod(1, -4, M) / prod(1, -1, M);
    }
    case LimitTag::GlOddQOddN:
      return (prod(1, -4, P) * prod(1, -8, M) / prod(1, -1, M)) * BigRat(2);
    case LimitTag::UEvenQEvenN:
      return prod(qpow(q, 3), -8, M) * prod(qpow(q, 5), -8, M) * prod(1, -8, M) / prod(1, -2, M);
    case LimitTag::UEvenQOddN:
      return prod(q, -8, M) * prod(qpow(q, 7), -8, M) * prod(1, -8, M) / prod(1, -2, M);
    case LimitTag::UOddQEvenN: {
      HPReal p = prod(q * q, -4, P);
      return p * p * prod(1, -4, M) / hp_product(1, -1 / q, M, digits);
    }
    case LimitTag::UOddQOddN: {
      HPReal p = prod(1, -4, P);
      return (p * p * prod(1, -4, M) / hp_product(1, -1 / q, M, digits)) * BigRat(2);
    }
    case LimitTag::SpOddQEvenN: {
      HPReal p = prod(qpow(q, 4), -8, P);
      return p * p * prod(1, -8, M) / prod(1, -2, M);
    }
    case LimitTag::SpOddQOddN:
      return (prod(1, -8, P) * prod(1, -16, M) / prod(1, -2, M)) * BigRat(2);
    default: return single_form(c.tag, q, digits);
  }
}

HPReal jtp_F_product(const BigRat& x, const BigRat& r, unsigned digits) {
  if (x == 0) throw std::domain_error("F(X,R) is undefined at X = 0");
  check_rho(r);
  return hp_product(1, r, ProductSign::Minus, digits) * hp_product(x / r, r, ProductSign::Plus, digits) *
         hp_product(1 / x, r, ProductSign::Plus, digits);
}

HPReal jtp_F_series(const BigRat& x, const BigRat& r, unsigned digits) {
  if (x == 0) throw std::domain_error("F(X,R) is undefined at X = 0");
  check_rho(r);
  const BigRat eps = ten_neg(digits + 6);
  const BigRat abs_r = abs_rat(r);
  // sum over one side: t_0 = first, t_{k+1} = t_k * r^(k+offset) * step
  auto side = [&](BigRat term, const BigRat& step, unsigned offset, BigRat& tail) {
    BigRat sum = 0;
    BigRat rk = pow(r, static_cast<long>(offset));
    const BigRat abs_step = abs_rat(step);
    BigRat ratio_bound = abs_rat(rk) * abs_step;
    for (;;) {
      sum += term;
      term *= rk * step;
      rk *= r;
      ratio_bound *= abs_r;
      // |t_{k+1}/t_k| is non-increasing from here on
      if (ratio_bound <= BigRat(1, 2) && 2 * abs_rat(term) <= eps) {
        tail = 2 * abs_rat(term);
        return sum;
      }
    }
  };
  BigRat tail_pos, tail_neg;
  BigRat sum = side(BigRat(1), x, 0, tail_pos);
  sum += side(r / x, 1 / x, 2, tail_neg);
  return HPReal::from_rational(sum, working_scale(digits)).widened(tail_pos + tail_neg);
}

HPReal jtp_F(const BigRat& x, const BigRat& r, unsigned digits) {
  HPReal product = jtp_F_product(x, r, digits);
  HPReal series = jtp_F_series(x, r, digits);
  if (!certainly_consistent(product, series))
    throw std::logic_error("theta series and product forms of F disagree");
  return product;
}

namespace {

BigRat gap_bound(const HPReal& a, const HPReal& b) { return abs_rat(a.mid() - b.mid()) + a.err() + b.err(); }

}  // namespace

SieveCheck sieve_check(const BigRat& x, const BigRat& r, unsigned digits) {
  HPReal f_pos = jtp_F(x, r, digits);
  HPReal f_neg = jtp_F(-x, r, digits);
  const BigRat r4 = pow(r, 4L);
  HPReal even_lhs = half(f_pos + f_neg);
  HPReal even_rhs = jtp_F(r * x * x, r4, digits);
  HPReal odd_lhs = half(f_pos - f_neg);
  HPReal odd_rhs = jtp_F(r * r * r * x * x, r4, digits) * x;
  BigRat even_gap = gap_bound(even_lhs, even_rhs);
  BigRat odd_gap = gap_bound(odd_lhs, odd_rhs);
  return {x, r, even_lhs, even_rhs, odd_lhs, odd_rhs, even_gap, odd_gap};
}

bool ConvergenceReport::strictly_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].dist_upper < rows[i - 1].dist_lower)) return false;
  return true;
}

ConvergenceReport convergence_report(const LimitCase& c, const std::vector<unsigned>& n_list, unsigned digits,
                                     std::optional<Family> family) {
  const LimitShape shape = limit_shape(c.tag);
  Family fam = shape.family;
  if (family) {
    const bool orthogonal_pm = c.tag == LimitTag::OPmOddQ || c.tag == LimitTag::OPmEvenQ;
    if (*family != fam && !(orthogonal_pm && *family == Family::OMinus))
      throw std::invalid_argument("family does not match limit case");
    fam = *family;
  }
  if (!is_integer(c.q) || !c.q.get_num().fits_ulong_p() || prime_of_power(c.q.get_num().get_ui()) == 0)
    throw std::invalid_argument("convergence needs a prime-power q");
  const unsigned long q = c.q.get_num().get_ui();
  if (characteristic_of(static_cast<unsigned>(q)) != shape.characteristic)
    throw std::invalid_argument("q has the wrong characteristic for this case");
  ConvergenceReport report{c, fam, limit_constant(c, digits), {}};
  const BigRat mid = report.limit.mid();
  const BigRat& err = report.limit.err();
  for (unsigned n : n_list) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (shape.parity == ParityFilter::Even && n % 2) throw std::invalid_argument("case requires even n");
    if (shape.parity == ParityFilter::Odd && n % 2 == 0) throw std::invalid_argument("case requires odd n");
    const unsigned dim = matrix_dim(fam, n);
    const unsigned d = normalization_exponent(fam, dim, shape.characteristic);
    BigRat ratio = involution_formula(fam, dim, c.q, shape.characteristic) / pow(c.q, static_cast<long>(d));
    const BigRat dist = abs_rat(ratio - mid);
    BigRat lower = dist - err;
    if (lower < 0) lower = 0;
    report.rows.push_back({n, std::move(ratio), std::move(lower), dist + err});
  }
  return report;
}

}  // namespace invol
