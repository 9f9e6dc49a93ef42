#pragma once

#include "invol/gfq.hpp"
#include "invol/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace invol {

enum class Family { GL, U, Sp, OPlus, OMinus, OOdd };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A classical group by family, matrix dimension and base field size.
/// dim is the matrix size: n for GL/U, 2n for Sp/O+/O-, 2n+1 for OOdd.
/// U(n,q) lives inside GL(n,q^2).
struct GroupId {
  Family family = Family::GL;
  unsigned dim = 0;
  unsigned q = 2;

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

/// Throws std::invalid_argument on parity or field violations.
void validate(const GroupId& g);
/// GF(q), or GF(q^2) for the unitary family.
const FieldDesc& ambient_field(const GroupId& g);

class MatFq {
 public:
  MatFq(const FieldDesc& field, unsigned dim);

  static MatFq identity(const FieldDesc& field, unsigned dim);
  static MatFq from_codes(const FieldDesc& field, unsigned dim, std::vector<std::uint8_t> codes);
  /// Entry (i,j) is base-q digit i*dim + j of index (least significant first).
  static MatFq from_index(const FieldDesc& field, unsigned dim, std::uint64_t index);

  const FieldDesc& field() const { return *field_; }
  unsigned dim() const { return dim_; }
  FqElem at(unsigned i, unsigned j) const { return FqElem(*field_, codes_[i * dim_ + j]); }
  void set(unsigned i, unsigned j, const FqElem& v);
  std::span<const std::uint8_t> codes() const { return codes_; }
  std::uint64_t index() const;

  friend bool operator==(const MatFq& a, const MatFq& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.codes_ == b.codes_;
  }

 private:
  const FieldDesc* field_;
  unsigned dim_;
  std::vector<std::uint8_t> codes_;
};

MatFq operator*(const MatFq& a, const MatFq& b);
MatFq transpose(const MatFq& m);
/// Entrywise Frobenius; only on GF(q^2).
MatFq conjugate(const MatFq& m);

enum class FormKind { None, Symplectic, QuadraticPlus, QuadraticMinus, QuadraticOddDim, Hermitian };

/// Canonical: least non-square alpha (odd q) or least trace-1 delta (even q)
/// in the anisotropic block. Alternate: a different but equivalent model,
/// used to check that the oracle does not depend on the choice.
enum class FormVariant { Canonical, Alternate };

struct FormSpec {
  FormKind kind = FormKind::None;
  /// Polar form of quad for the quadratic kinds.
  std::optional<MatFq> gram;
  /// Upper-triangular c_ij with Q(x) = sum_{i<=j} c_ij x_i x_j.
  std::optional<MatFq> quad;
};

FormSpec canonical_form(const GroupId& g, FormVariant variant = FormVariant::Canonical);

/// Evaluates Q(x) for a quadratic FormSpec.
FqElem quadratic_value(const FormSpec& form, std::span<const FqElem> x);

bool is_member(const GroupId& g, const MatFq& m);
bool is_member(const GroupId& g, const FormSpec& form, const MatFq& m);

/// |G| by the closed-form order formulas, for rational q.
/// O^-(0) has no order; use reciprocal_order for it.
BigRat order_formula(Family family, unsigned dim, const BigRat& q);
/// 1/|G|, with the convention 1/|O^-(0,q)| = 0. For odd dim OPlus and OMinus
/// both mean the odd-dimensional orthogonal group.
BigRat reciprocal_order(Family family, unsigned dim, const BigRat& q);

BigInt group_order(const GroupId& g);

struct Census {
  BigInt order;
  BigInt involutions;  // identity included

  friend bool operator==(const Census&, const Census&) = default;
};

class OracleInfeasible : public std::runtime_error {
 public:
  OracleInfeasible(const BigInt& required, const BigInt& budget);
  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

BigInt default_oracle_budget();

struct OracleOptions {
  BigInt budget = default_oracle_budget();
  unsigned threads = 1;
  /// Number of index intervals; 0 picks one per thread times four.
  unsigned chunks = 0;
  FormVariant variant = FormVariant::Canonical;
};

/// Size of the scanned space, |ambient field|^(dim^2).
BigInt oracle_space_size(const GroupId& g);

/// Exhaustive scan of every dim x dim matrix over the ambient field.
Census oracle_census(const GroupId& g, const OracleOptions& options = {});

/// One interval [begin, end) of the scan; sums over a partition equal the census.
Census oracle_scan_range(const GroupId& g, const FormSpec& form, std::uint64_t begin, std::uint64_t end);

}  // namespace invol
