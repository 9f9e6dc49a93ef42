#pragma once

#include "invol/matgroups.hpp"
#include "invol/numeric.hpp"

#include <vector>

namespace invol {

enum class Characteristic { Even, Odd };

Characteristic characteristic_of(unsigned q);

/// One term of an involution-count sum: the size of one conjugacy class of
/// involutions (or, for the zero-order convention, an explicit zero).
/// part labels the sum the term belongs to: 'A', 'B', 'C' for the
/// even-characteristic Sp/O sums, '1' and '2' for the two orthogonal sums in
/// odd characteristic, 'A' for the single sums of GL, U and odd-q Sp.
struct Summand {
  char part;
  unsigned r;
  BigRat value;
};

/// Class sizes whose total is the number of involutions (identity included).
/// q may be any nonzero rational; char selects the even- or odd-characteristic
/// formula. Throws std::invalid_argument on bad family/dimension combinations.
std::vector<Summand> involution_summands(Family family, unsigned dim, const BigRat& q, Characteristic ch);

BigRat involution_formula(Family family, unsigned dim, const BigRat& q, Characteristic ch);

/// Exact count for a concrete group; q's parity picks the formula.
BigInt count_involutions(const GroupId& g);

/// n for the natural parameterization: dim n (GL, U), 2n (Sp, O+, O-), 2n+1 (OOdd).
unsigned family_parameter(Family family, unsigned dim);
unsigned matrix_dim(Family family, unsigned n);

/// Power of q in the normalized ratio i(n,q)/q^d.
unsigned normalization_exponent(Family family, unsigned dim, Characteristic ch);
unsigned normalization_exponent(const GroupId& g);

struct NormalizedRatio {
  unsigned n;
  BigRat value;
  unsigned exponent;
};

enum class ParityFilter { All, Even, Odd };

/// i(n,q)/q^{d(n,q)} for n = 1..n_max (filtered by the parity of n).
std::vector<NormalizedRatio> ratio_table(Family family, const BigRat& q, Characteristic ch, unsigned n_max,
                                         ParityFilter parity = ParityFilter::All);

}  // namespace invol
