#include "wdm/weights.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace wdm {

WeightVector::WeightVector(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight vector is empty");
  std::uint64_t g = 0;
  for (auto w : weights_) {
    if (w == 0) throw std::invalid_argument("weights must be positive");
    g = std::gcd(g, static_cast<std::uint64_t>(w));
    if (product_ > (std::uint64_t{1} << 40)) throw std::invalid_argument("weight product too large");
    product_ *= w;
    lcm_ = std::lcm(lcm_, static_cast<std::uint64_t>(w));
  }
  if (g != 1) throw std::invalid_argument("weights must be coprime, gcd = " + std::to_string(g));
}

WeightVector WeightVector::uniform(std::size_t count) {
  return WeightVector(std::vector<std::uint32_t>(count, 1));
}

WeightVector WeightVector::cover(std::uint32_t e, std::size_t n) {
  std::vector<std::uint32_t> w(n + 1, 1);
  w[0] = e;
  return WeightVector(std::move(w));
}

std::uint64_t WeightVector::degree(const Monomial& mono) const {
  if (mono.size() != weights_.size())
    throw std::invalid_argument("monomial length does not match weight vector");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) d += static_cast<std::uint64_t>(weights_[i]) * mono[i];
  return d;
}

WeightVector WeightVector::prepend_one() const {
  std::vector<std::uint32_t> w;
  w.reserve(weights_.size() + 1);
  w.push_back(1);
  w.insert(w.end(), weights_.begin(), weights_.end());
  return WeightVector(std::move(w));
}

WeightVector WeightVector::without(std::size_t i) const {
  std::vector<std::uint32_t> w = weights_;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
  return WeightVector(std::move(w));
}

bool WeightVector::is_cover_shape() const {
  for (std::size_t i = 1; i < weights_.size(); ++i)
    if (weights_[i] != 1) return false;
  return true;
}

}  // namespace wdm
