#include "membership.hpp"

#include <array>

namespace invol::detail {

MembershipKernel::MembershipKernel(const GroupId& g, const FormSpec& form)
    : family_(g.family), d_(g.dim), field_(&ambient_field(g)) {
  q_ = field_->q;
  if (form.gram) {
    gram_.assign(form.gram->codes().begin(), form.gram->codes().end());
    for (unsigned a = 0; a < d_; ++a)
      for (unsigned b = 0; b < d_; ++b)
        if (auto c = gram_[a * d_ + b])
          gram_terms_.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), c});
  }
  if (form.quad) {
    auto codes = form.quad->codes();
    quad_diag_.resize(d_);
    for (unsigned a = 0; a < d_; ++a) {
      quad_diag_[a] = codes[a * d_ + a];
      for (unsigned b = a; b < d_; ++b)
        if (auto c = codes[a * d_ + b])
          quad_terms_.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), c});
    }
  }
}

bool MembershipKernel::member(const std::uint8_t* m) const {
  switch (family_) {
    case Family::GL:
      return invertible(m);
    case Family::Sp:
      return preserves_bilinear(m);
    case Family::U:
      return preserves_hermitian(m);
    case Family::OPlus:
    case Family::OMinus:
    case Family::OOdd:
      return preserves_quadratic(m) && preserves_bilinear(m);
  }
  return false;
}

bool MembershipKernel::invertible(const std::uint8_t* m) const {
  std::array<std::uint8_t, 64> a{};
  const unsigned d = d_;
  for (unsigned t = 0; t < d * d; ++t) a[t] = m[t];
  const auto& f = *field_;
  for (unsigned col = 0; col < d; ++col) {
    unsigned pivot = col;
    while (pivot < d && a[pivot * d + col] == 0) ++pivot;
    if (pivot == d) return false;
    if (pivot != col)
      for (unsigned j = 0; j < d; ++j) std::swap(a[pivot * d + j], a[col * d + j]);
    const unsigned inv = f.inv_table[a[col * d + col]];
    for (unsigned r = col + 1; r < d; ++r) {
      const unsigned factor = f.mul(a[r * d + col], inv);
      if (!factor) continue;
      for (unsigned j = col; j < d; ++j) a[r * d + j] = f.sub(a[r * d + j], f.mul(factor, a[col * d + j]));
    }
  }
  return true;
}

// B(m e_i, m e_j) = B(e_i, e_j) for i < j. For an alternating or symmetric
// gram this covers every pair; the diagonal is handled by the quadratic check.
bool MembershipKernel::preserves_bilinear(const std::uint8_t* m) const {
  const auto& f = *field_;
  const unsigned d = d_;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) {
      unsigned acc = 0;
      for (const auto& t : gram_terms_)
        acc = f.add(acc, f.mul(t.coef, f.mul(m[t.a * d + i], m[t.b * d + j])));
      if (acc != gram_[i * d + j]) return false;
    }
  return true;
}

bool MembershipKernel::preserves_quadratic(const std::uint8_t* m) const {
  const auto& f = *field_;
  const unsigned d = d_;
  for (unsigned j = 0; j < d; ++j) {
    unsigned acc = 0;
    for (const auto& t : quad_terms_) acc = f.add(acc, f.mul(t.coef, f.mul(m[t.a * d + j], m[t.b * d + j])));
    if (acc != quad_diag_[j]) return false;
  }
  return true;
}

// conj(m)^T m = I against the identity Hermitian gram.
bool MembershipKernel::preserves_hermitian(const std::uint8_t* m) const {
  const auto& f = *field_;
  const unsigned d = d_;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i; j < d; ++j) {
      unsigned acc = 0;
      for (unsigned k = 0; k < d; ++k) acc = f.add(acc, f.mul(f.frob_table[m[k * d + i]], m[k * d + j]));
      if (acc != (i == j ? 1u : 0u)) return false;
    }
  return true;
}

bool MembershipKernel::squares_to_identity(const std::uint8_t* m) const {
  const auto& f = *field_;
  const unsigned d = d_;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      unsigned acc = 0;
      for (unsigned k = 0; k < d; ++k) acc = f.add(acc, f.mul(m[i * d + k], m[k * d + j]));
      if (acc != (i == j ? 1u : 0u)) return false;
    }
  return true;
}

}  // namespace invol::detail
