#pragma once

#include <cstdint>
#include <vector>

#include "drinfeld/prime_field.hpp"

namespace drinfeld::detail {

// Row echelon basis grown one vector at a time.
class EchelonSpan {
 public:
  explicit EchelonSpan(const PrimeField& fp) : fp_(&fp) {}

  std::size_t dim() const noexcept { return rows_.size(); }

  bool insert(std::vector<std::uint32_t> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::uint32_t c = v[pivots_[k]];
      if (c == 0) continue;
      const auto& r = rows_[k];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (r[j] != 0) v[j] = fp_->sub(v[j], fp_->mul(c, r[j]));
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    const std::uint32_t inv = fp_->inv(v[piv]);
    for (auto& x : v) x = fp_->mul(x, inv);
    // keep rows fully reduced at the new pivot
    for (auto& r : rows_) {
      const std::uint32_t c = r[piv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) r[j] = fp_->sub(r[j], fp_->mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  const PrimeField* fp_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace drinfeld::detail
