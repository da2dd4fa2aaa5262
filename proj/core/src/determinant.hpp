#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cremona::detail {

// Laplace expansion along rows with memoization over column subsets; no
// divisions, so it works over any commutative ring. zero is the additive identity.
template <class T>
T laplace_det(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) return zero;
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  // minor(mask): determinant of rows [n - popcount(mask), n) restricted to columns in mask.
  auto minor = [&](auto&& self, std::uint32_t mask) -> const T& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    if (row == n - 1) {
      std::size_t col = static_cast<std::size_t>(__builtin_ctz(mask));
      slot = m[row][col];
      return *slot;
    }
    T acc = zero;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const T& entry = m[row][col];
      bool entry_zero = entry == zero;
      if (!entry_zero) {
        const T& sub = self(self, mask & ~(1u << col));
        if (!(sub == zero)) {
          if (sign > 0)
            acc = acc + entry * sub;
          else
            acc = acc - entry * sub;
        }
      }
      sign = -sign;
    }
    slot = std::move(acc);
    return *slot;
  };
  return minor(minor, static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
}

}  // namespace cremona::detail
