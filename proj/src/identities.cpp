#include "invol/identities.hpp"

#include "invol/matgroups.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace invol {

namespace {

constexpr std::array kAll = {IdentityId::GlEven,    IdentityId::GlOdd,     IdentityId::SpOdd,  IdentityId::SpEven,
                             IdentityId::OPlusOdd,  IdentityId::OMinusOdd, IdentityId::OOddDim, IdentityId::OPlusEven,
                             IdentityId::OMinusEven, IdentityId::LemmaH,    IdentityId::LemmaG};

struct Entry {
  std::string_view tag;
  std::string_view statement;
};

constexpr Entry kEntries[] = {
    {"gl-even", "sum_n u^n q^C(n,2) sum_{r<=n/2} 1/(q^{r(2n-3r)}|GL(r)||GL(n-2r)|) = (-u/q;1/q)/(u^2/q;1/q)"},
    {"gl-odd", "sum_n u^n q^C(n,2) sum_r 1/(|GL(r)||GL(n-r)|) = (-u/q;1/q)^2/(u^2/q;1/q)"},
    {"sp-odd", "sum_n u^n q^{n^2} sum_r 1/(|Sp(2r)||Sp(2n-2r)|) = (-u/q^2;1/q^2)^2/(u^2/q^2;1/q^2)"},
    {"sp-even", "sum_n u^n q^{n^2} (sum 1/A_r + 1/B_r + 1/C_r) = (-u/q^2;1/q^2)/((1-u)(u^2/q^2;1/q^2))"},
    {"o-plus-odd",
     "sum_n u^n q^{n^2} [sum 1/|O+(r)||O+(2n-r)| + sum 1/|O-(r)||O-(2n-r)|] = "
     "(-u;1/q^2)^2/(2(1-uq)(u^2;1/q^2)) + (-u/q;1/q^2)^2/(2(u^2;1/q^2))"},
    {"o-minus-odd",
     "sum_n u^n q^{n^2} [sum 1/|O+(r)||O-(2n-r)| + sum 1/|O-(r)||O+(2n-r)|] = "
     "(-u;1/q^2)^2/(2(1-uq)(u^2;1/q^2)) - (-u/q;1/q^2)^2/(2(u^2;1/q^2))"},
    {"o-odd-dim",
     "sum_n u^n q^{n^2} [sum 1/|O+(r)||O+(2n+1-r)| + sum 1/|O-(r)||O-(2n+1-r)|] = "
     "(-u/q^2;1/q^2)^2/((1-u)(u^2/q^2;1/q^2))"},
    {"o-plus-even",
     "sum_n u^n q^{n^2} (sum 1/A_r + 1/B_r + 1/C_r, O+ type) = "
     "(-u;1/q^2)/(2(1-uq)(u^2;1/q^2)) + (-u/q;1/q^2)/(2(u^2;1/q^2))"},
    {"o-minus-even",
     "sum_n u^n q^{n^2} (sum_{r<n} 1/A_r + 1/B_r + 1/C_r, O- type) = "
     "(-u;1/q^2)/(2(1-uq)(u^2;1/q^2)) - (-u/q;1/q^2)/(2(u^2;1/q^2))"},
    {"lemma-H", "sum_m q^C(m,2) sum_k (-a)^{m-k}(-b)^k/((q;q)_k q^C(k,2) (q;q)_{m-k} q^C(m-k,2)) = "
                "(-a/q;1/q)(-b/q;1/q)/(ab/q;1/q)"},
    {"lemma-G", "double sum over (n, r <= (n-t)/s) = a^t q^C(t,2) (-a q^{t-1};1/q)/(b q^{-s/2};1/q)"},
};

using Bracket = std::function<BigRat(unsigned n)>;

long choose2(long n) { return n * (n - 1) / 2; }

USeries generating_series(const Bracket& bracket, bool gl_type, const BigRat& q, unsigned order) {
  USeries s(order, q);
  for (unsigned n = 0; n <= order; ++n) {
    const long e = gl_type ? choose2(n) : static_cast<long>(n) * n;
    s.set(n, pow(q, e) * bracket(n));
  }
  return s;
}

BigRat rgl(unsigned r, const BigRat& q) { return reciprocal_order(Family::GL, r, q); }
BigRat rsp(unsigned m, const BigRat& q) { return reciprocal_order(Family::Sp, m, q); }
BigRat ro(int eps, unsigned r, const BigRat& q) {
  return reciprocal_order(eps > 0 ? Family::OPlus : Family::OMinus, r, q);
}

BigRat bracket_gl_even(unsigned n, const BigRat& q) {
  BigRat acc = 0;
  for (unsigned r = 0; 2 * r <= n; ++r)
    acc += rgl(r, q) * rgl(n - 2 * r, q) / pow(q, static_cast<long>(r) * (2L * n - 3L * r));
  return acc;
}

BigRat bracket_gl_odd(unsigned n, const BigRat& q) {
  BigRat acc = 0;
  for (unsigned r = 0; r <= n; ++r) acc += rgl(r, q) * rgl(n - r, q);
  return acc;
}

BigRat bracket_sp_odd(unsigned n, const BigRat& q) {
  BigRat acc = 0;
  for (unsigned r = 0; r <= n; ++r) acc += rsp(2 * r, q) * rsp(2 * n - 2 * r, q);
  return acc;
}

BigRat bracket_sp_even(unsigned n, const BigRat& q) {
  BigRat acc = 0;
  for (unsigned r = 0; r <= n; ++r) {
    const long base = static_cast<long>(r) * (r + 1) / 2 + static_cast<long>(r) * (2L * n - 2L * r);
    const BigRat tail = rsp(2 * n - 2 * r, q) / pow(q, base);
    if (r % 2 == 0) acc += rsp(r, q) * tail;
    if (r >= 2 && r % 2 == 0) acc += rsp(r - 2, q) * tail / pow(q, static_cast<long>(r) - 1);
    if (r % 2 == 1) acc += rsp(r - 1, q) * tail;
  }
  return acc;
}

// [sum_{r=0}^{dim} 1/|O^a(r)||O^b(dim-r)| over the r-range of each identity]
BigRat bracket_o_odd_char(int first_hi, int second_hi, unsigned dim, unsigned first_end, unsigned second_end,
                          const BigRat& q) {
  BigRat acc = 0;
  for (unsigned r = 0; r <= first_end && r <= dim; ++r) acc += ro(+1, r, q) * ro(first_hi, dim - r, q);
  for (unsigned r = 1; r <= second_end && r <= dim; ++r) acc += ro(-1, r, q) * ro(second_hi, dim - r, q);
  return acc;
}

BigRat bracket_o_even_char(int eps, unsigned n, const BigRat& q) {
  BigRat acc = 0;
  for (unsigned r = 0; r <= n; ++r) {
    const long rl = r, span = 2L * n - 2L * r;
    if (r % 2 == 0 && (eps > 0 || r + 1 <= n))
      acc += rsp(r, q) * ro(eps, 2 * n - 2 * r, q) / pow(q, rl * (rl - 1) / 2 + rl * span);
    if (r >= 2 && r % 2 == 0)
      acc += rsp(r - 2, q) * rsp(2 * n - 2 * r, q) / (2 * pow(q, rl * (rl + 1) / 2 + (rl - 1) * span - 1));
    if (r % 2 == 1)
      acc += rsp(r - 1, q) * rsp(2 * n - 2 * r, q) / (2 * pow(q, rl * (rl - 1) / 2 + (rl - 1) * span));
  }
  return acc;
}

USeries product_side_orthogonal(int sign, bool squared, const BigRat& q, unsigned order) {
  // (1/2)/(1-uq) * (-u;Q2)^k/(u^2;Q2) +- (1/2) (-u/q;Q2)^k/(u^2;Q2), k = 2 or 1
  const BigRat Q2 = 1 / (q * q);
  const BigRat half(1, 2);
  USeries big = euler_expand(1, 1, Q2, EulerSign::Product, order, q);
  USeries small = euler_expand(1 / q, 1, Q2, EulerSign::Product, order, q);
  if (squared) {
    big *= big;
    small *= small;
  }
  const USeries recip = euler_expand(1, 2, Q2, EulerSign::Reciprocal, order, q);
  USeries first = USeries::geometric(q, 1, order, q) * big * recip * half;
  USeries second = small * recip * half;
  return sign > 0 ? first + second : first - second;
}

struct LemmaSample {
  BigRat alpha, beta;
  unsigned s, t;
};

std::vector<LemmaSample> lemma_grid(IdentityId id) {
  const std::array<std::pair<int, int>, 3> ab = {{{1, 1}, {1, 2}, {2, 3}}};
  std::vector<LemmaSample> out;
  for (auto [a, b] : ab) {
    if (id == IdentityId::LemmaH) {
      out.push_back({a, b, 0, 0});
    } else {
      for (unsigned t = 0; t <= 2; ++t) out.push_back({a, b, 2, t});
    }
  }
  return out;
}

std::string describe(const LemmaSample& s, IdentityId id) {
  std::string out = "alpha=" + s.alpha.get_str() + " beta=" + s.beta.get_str();
  if (id == IdentityId::LemmaG) out += " s=" + std::to_string(s.s) + " t=" + std::to_string(s.t);
  return out;
}

SeriesPair lemma_sides(IdentityId id, const LemmaSample& s, const BigRat& q, unsigned order) {
  if (id == IdentityId::LemmaH) return H_series(s.alpha, s.beta, q, order);
  return G_series(s.alpha, s.beta, q, s.s, s.t, order);
}

const LemmaSample kDefaultSample{1, 2, 2, 1};

void require_q(const BigRat& q) {
  if (q <= 1) throw std::invalid_argument("q must exceed 1");
}

}  // namespace

std::span<const IdentityId> all_identities() { return kAll; }

std::string_view identity_tag(IdentityId id) { return kEntries[static_cast<int>(id)].tag; }

std::string_view identity_statement(IdentityId id) { return kEntries[static_cast<int>(id)].statement; }

std::optional<IdentityId> parse_identity(std::string_view tag) {
  for (auto id : kAll)
    if (identity_tag(id) == tag) return id;
  return std::nullopt;
}

USeries lhs_series(IdentityId id, const BigRat& q, unsigned order) {
  require_q(q);
  switch (id) {
    case IdentityId::GlEven:
      return generating_series([&](unsigned n) { return bracket_gl_even(n, q); }, true, q, order);
    case IdentityId::GlOdd:
      return generating_series([&](unsigned n) { return bracket_gl_odd(n, q); }, true, q, order);
    case IdentityId::SpOdd:
      return generating_series([&](unsigned n) { return bracket_sp_odd(n, q); }, false, q, order);
    case IdentityId::SpEven:
      return generating_series([&](unsigned n) { return bracket_sp_even(n, q); }, false, q, order);
    case IdentityId::OPlusOdd:
      return generating_series(
          [&](unsigned n) { return bracket_o_odd_char(+1, -1, 2 * n, 2 * n, 2 * n - 1, q); }, false, q, order);
    case IdentityId::OMinusOdd:
      return generating_series(
          [&](unsigned n) {
            // the first sum stops at r = 2n-1, the second runs to r = 2n
            if (n == 0) return BigRat(0);
            return bracket_o_odd_char(-1, +1, 2 * n, 2 * n - 1, 2 * n, q);
          },
          false, q, order);
    case IdentityId::OOddDim:
      return generating_series(
          [&](unsigned n) { return bracket_o_odd_char(+1, -1, 2 * n + 1, 2 * n + 1, 2 * n, q); }, false, q, order);
    case IdentityId::OPlusEven:
      return generating_series([&](unsigned n) { return bracket_o_even_char(+1, n, q); }, false, q, order);
    case IdentityId::OMinusEven:
      return generating_series([&](unsigned n) { return bracket_o_even_char(-1, n, q); }, false, q, order);
    case IdentityId::LemmaH:
    case IdentityId::LemmaG:
      return lemma_sides(id, kDefaultSample, q, order).lhs;
  }
  throw std::logic_error("unknown identity");
}

USeries rhs_series(IdentityId id, const BigRat& q, unsigned order) {
  require_q(q);
  const BigRat Q = 1 / q;
  const BigRat Q2 = Q * Q;
  auto prod = [&](const BigRat& c, unsigned m, const BigRat& base, EulerSign sign) {
    return euler_expand(c, m, base, sign, order, q);
  };
  switch (id) {
    case IdentityId::GlEven:
      return prod(Q, 1, Q, EulerSign::Product) * prod(Q, 2, Q, EulerSign::Reciprocal);
    case IdentityId::GlOdd: {
      USeries p = prod(Q, 1, Q, EulerSign::Product);
      return p * p * prod(Q, 2, Q, EulerSign::Reciprocal);
    }
    case IdentityId::SpOdd:
    case IdentityId::OOddDim: {
      USeries p = prod(Q2, 1, Q2, EulerSign::Product);
      USeries out = p * p * prod(Q2, 2, Q2, EulerSign::Reciprocal);
      if (id == IdentityId::OOddDim) out *= USeries::geometric(1, 1, order, q);
      return out;
    }
    case IdentityId::SpEven:
      return USeries::geometric(1, 1, order, q) * prod(Q2, 1, Q2, EulerSign::Product) *
             prod(Q2, 2, Q2, EulerSign::Reciprocal);
    case IdentityId::OPlusOdd:
      return product_side_orthogonal(+1, true, q, order);
    case IdentityId::OMinusOdd:
      return product_side_orthogonal(-1, true, q, order);
    case IdentityId::OPlusEven:
      return product_side_orthogonal(+1, false, q, order);
    case IdentityId::OMinusEven:
      return product_side_orthogonal(-1, false, q, order);
    case IdentityId::LemmaH:
    case IdentityId::LemmaG:
      return lemma_sides(id, kDefaultSample, q, order).rhs;
  }
  throw std::logic_error("unknown identity");
}

IdentityReport compare_series(IdentityId id, const USeries& lhs, const USeries& rhs) {
  if (lhs.order() != rhs.order()) throw std::invalid_argument("series order mismatch");
  IdentityReport report{id, lhs.q(), lhs.order(), true, std::nullopt, {}};
  for (unsigned d = 0; d <= lhs.order(); ++d) {
    if (lhs[d] != rhs[d]) {
      report.match = false;
      report.first_mismatch = Mismatch{d, lhs[d], rhs[d]};
      break;
    }
  }
  return report;
}

IdentityReport verify(IdentityId id, const BigRat& q, unsigned order) {
  require_q(q);
  if (id != IdentityId::LemmaH && id != IdentityId::LemmaG)
    return compare_series(id, lhs_series(id, q, order), rhs_series(id, q, order));
  for (const auto& sample : lemma_grid(id)) {
    auto sides = lemma_sides(id, sample, q, order);
    auto report = compare_series(id, sides.lhs, sides.rhs);
    if (!report.match) {
      report.parameters = describe(sample, id);
      return report;
    }
  }
  return IdentityReport{id, q, order, true, std::nullopt, {}};
}

}  // namespace invol
