#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wdm {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

/// Coprime positive weights (w_0, ..., w_n) of a weighted projective space.
class WeightVector {
 public:
  /// Throws std::invalid_argument on an empty list, a zero weight or gcd != 1.
  explicit WeightVector(std::vector<std::uint32_t> weights);

  static WeightVector uniform(std::size_t count);
  /// (e, 1, ..., 1) with n trailing ones.
  static WeightVector cover(std::uint32_t e, std::size_t n);

  std::size_t size() const { return weights_.size(); }
  std::uint32_t operator[](std::size_t i) const { return weights_[i]; }
  std::span<const std::uint32_t> values() const { return weights_; }

  /// |w|, the product of the weights.
  std::uint64_t product() const { return product_; }
  std::uint64_t lcm() const { return lcm_; }

  std::uint64_t degree(const Monomial& mono) const;

  /// (1, w_0, ..., w_n), the weights after adjoining a homogenizing variable.
  WeightVector prepend_one() const;
  /// The weights with entry i removed; the remainder must still be coprime.
  WeightVector without(std::size_t i) const;

  /// True when the shape is (e, 1, ..., 1).
  bool is_cover_shape() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::uint32_t> weights_;
  std::uint64_t product_ = 1;
  std::uint64_t lcm_ = 1;
};

}  // namespace wdm
