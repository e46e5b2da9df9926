#ifndef ESTAR_SCAN_HPP
#define ESTAR_SCAN_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "estar/errors.hpp"
#include "estar/rational.hpp"

namespace estar {

/// Per-item integer row vectors for subset scans, produced by scaling a
/// rational table by the lcm of all denominators. Kept only when every entry
/// and every possible partial sum fits comfortably in int64.
struct ScaledRows {
  std::vector<std::vector<std::int64_t>> rows;  // one per item, common dim
  mpz_class scale;                              // original = row / scale
};

/// nullopt when the scaled values cannot be guaranteed overflow-free.
std::optional<ScaledRows> scale_rows(const std::vector<std::vector<Rational>>& rows);

/// Wider fallback tier for weightings whose common denominator exceeds
/// int64 (the power-of-base instantiations do); same contract.
struct ScaledRows128 {
  std::vector<std::vector<__int128>> rows;
  mpz_class scale;
};
std::optional<ScaledRows128> scale_rows_i128(const std::vector<std::vector<Rational>>& rows);
std::optional<__int128> rational_times_scale_i128(const Rational& r, const mpz_class& scale);

/// Scans every nonempty subset of the items described by the rational table
/// `rows` and returns the lowest mask whose component sums equal `target`
/// while not appearing in the sorted `allowed` mask list. Picks the widest
/// integer tier that provably cannot overflow, falling back to exact
/// rationals. When coeff_bound > 0, throws DomainError if any symbol
/// component (dimension >= 1) of any subset sum exceeds it in scaled
/// integer units.
std::optional<std::uint32_t> scan_lowest_hit(const std::vector<std::vector<Rational>>& rows,
                                             const std::vector<Rational>& target,
                                             const std::vector<std::uint32_t>& allowed,
                                             long coeff_bound);

/// Visits every nonempty subset of k <= max_subset_bits items exactly once
/// (Gray-code order: each step toggles one item) keeping component sums
/// current. cb(mask, sums) runs after every step. Callers wanting the
/// canonical "first" witness must reduce with min-mask themselves, since the
/// visit order is not ascending.
template <class T, class Cb>
void gray_subset_scan(const std::vector<std::vector<T>>& items, Cb&& cb) {
  const int k = static_cast<int>(items.size());
  if (k == 0) return;
  if (k > 30) throw ResourceError("subset scan over " + std::to_string(k) + " items");
  const size_t dim = items[0].size();
  std::vector<T> sum(dim, T(0));
  std::uint32_t cur = 0;
  const std::uint64_t total = std::uint64_t(1) << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int j = std::countr_zero(i);
    const std::uint32_t bit = std::uint32_t(1) << j;
    cur ^= bit;
    if (cur & bit)
      for (size_t d = 0; d < dim; ++d) sum[d] += items[j][d];
    else
      for (size_t d = 0; d < dim; ++d) sum[d] -= items[j][d];
    cb(cur, sum);
  }
}

}  // namespace estar

#endif
