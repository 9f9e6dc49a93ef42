#pragma once

#include "invol/counts.hpp"
#include "invol/hpreal.hpp"
#include "invol/matgroups.hpp"
#include "invol/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invol {

/// Working scale (decimal digits after the point) for a D-digit request.
unsigned working_scale(unsigned digits);

enum class ProductSign { Plus = 1, Minus = -1 };

/// prod_{i>=1} (1 + sign * c * rho^i), tail certified to relative 10^-(D+5).
HPReal hp_product(const BigRat& c, const BigRat& rho, ProductSign sign, unsigned digits);
HPReal hp_product(const HPReal& c, const BigRat& rho, ProductSign sign, unsigned digits);

/// Square root with a residual-checked enclosure; exact for rational squares.
HPReal hp_sqrt(const BigRat& x, unsigned digits);

enum class LimitTag {
  GlEvenQEvenN,
  GlEvenQOddN,
  GlOddQEvenN,
  GlOddQOddN,
  UEvenQEvenN,
  UEvenQOddN,
  UOddQEvenN,
  UOddQOddN,
  SpOddQEvenN,
  SpOddQOddN,
  SpEvenQ,
  OPmOddQ,
  OOddDimOddQ,
  OPmEvenQ,
};

const std::vector<LimitTag>& all_limit_tags();
std::string limit_tag_name(LimitTag tag);
std::optional<LimitTag> parse_limit_tag(std::string_view name);

struct LimitCase {
  LimitTag tag;
  BigRat q;
};

/// Static facts about a tag.
struct LimitShape {
  Family family;
  Characteristic characteristic;
  ParityFilter parity;
  unsigned q_infinity_value;  // 1 or 2
  bool two_forms;
};

LimitShape limit_shape(LimitTag tag);

/// Sum/difference-of-products form.
HPReal limit_constant(const LimitCase& c, unsigned digits);
/// Single-product form (same expression when the tag has only one form).
HPReal limit_constant_alt(const LimitCase& c, unsigned digits);

/// F(X,R) = (R;R)(-X;R)(-R/X;R); also evaluated from its theta series and
/// the two values are required to agree.
HPReal jtp_F(const BigRat& x, const BigRat& r, unsigned digits);
HPReal jtp_F_product(const BigRat& x, const BigRat& r, unsigned digits);
HPReal jtp_F_series(const BigRat& x, const BigRat& r, unsigned digits);

struct SieveCheck {
  BigRat x, r;
  HPReal even_lhs, even_rhs;  // (F(X,R)+F(-X,R))/2 and F(RX^2,R^4)
  HPReal odd_lhs, odd_rhs;    // (F(X,R)-F(-X,R))/2 and X F(R^3 X^2,R^4)
  BigRat even_gap, odd_gap;   // certified upper bounds on |lhs - rhs|
};

SieveCheck sieve_check(const BigRat& x, const BigRat& r, unsigned digits);

struct ConvergenceRow {
  unsigned n;
  BigRat ratio;
  BigRat dist_lower;  // certified bounds on |ratio - limit|
  BigRat dist_upper;
};

struct ConvergenceReport {
  LimitCase limit_case;
  Family family;
  HPReal limit;
  std::vector<ConvergenceRow> rows;
  bool strictly_decreasing() const;
};

/// Orthogonal tags accept OPlus (default) or OMinus as the family.
ConvergenceReport convergence_report(const LimitCase& c, const std::vector<unsigned>& n_list,
                                     unsigned digits = 30, std::optional<Family> family = std::nullopt);

}  // namespace invol
