#pragma once

#include "invol/numeric.hpp"
#include "invol/qseries.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace invol {

/// The sum=product identities: the nine group generating functions plus the
/// two double-sum lemmas they reduce to.
enum class IdentityId {
  GlEven,
  GlOdd,
  SpOdd,
  SpEven,
  OPlusOdd,
  OMinusOdd,
  OOddDim,
  OPlusEven,
  OMinusEven,
  LemmaH,
  LemmaG,
};

std::span<const IdentityId> all_identities();
std::string_view identity_tag(IdentityId id);
/// One-line statement of the identity in plain notation.
std::string_view identity_statement(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view tag);

struct Mismatch {
  unsigned degree;
  BigRat lhs;
  BigRat rhs;
};

struct IdentityReport {
  IdentityId id;
  BigRat q;
  unsigned order;
  bool match;
  std::optional<Mismatch> first_mismatch;
  /// Parameter sample that failed, for the lemma grids; empty otherwise.
  std::string parameters;
};

/// Sum side: sum_n u^n q^{e(n)} (bracket of reciprocal group orders).
/// For the lemmas, the default sample (alpha, beta) = (1, 2), (s, t) = (2, 1).
USeries lhs_series(IdentityId id, const BigRat& q, unsigned order);
/// Product side, assembled from Euler expansions and geometric prefactors.
USeries rhs_series(IdentityId id, const BigRat& q, unsigned order);

/// Coefficient-exact comparison. For the lemma tags every sample of the
/// parameter grid is checked and the first failing one is reported.
IdentityReport verify(IdentityId id, const BigRat& q, unsigned order = 12);

/// Compares two given series as the sides of identity id.
IdentityReport compare_series(IdentityId id, const USeries& lhs, const USeries& rhs);

}  // namespace invol
