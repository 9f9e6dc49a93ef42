#pragma once

#include "invol/matgroups.hpp"

#include <cstdint>
#include <vector>

namespace invol::detail {

// Table-driven membership test over raw element codes; the hot loop of the
// oracle. Built once per (group, form) and shared read-only across threads.
class MembershipKernel {
 public:
  MembershipKernel(const GroupId& g, const FormSpec& form);

  bool member(const std::uint8_t* m) const;
  bool squares_to_identity(const std::uint8_t* m) const;
  unsigned dim() const { return d_; }
  unsigned field_size() const { return q_; }

 private:
  struct Term {
    std::uint8_t a, b, coef;
  };

  bool invertible(const std::uint8_t* m) const;
  bool preserves_bilinear(const std::uint8_t* m) const;
  bool preserves_quadratic(const std::uint8_t* m) const;
  bool preserves_hermitian(const std::uint8_t* m) const;

  Family family_;
  unsigned d_;
  unsigned q_;
  const FieldDesc* field_;
  std::vector<Term> gram_terms_;
  std::vector<Term> quad_terms_;
  std::vector<std::uint8_t> gram_;       // d*d
  std::vector<std::uint8_t> quad_diag_;  // Q(e_j)
};

}  // namespace invol::detail
