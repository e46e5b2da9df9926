#include "estar/scan.hpp"

#include <algorithm>

namespace estar {

namespace {

mpz_class common_scale(const std::vector<std::vector<Rational>>& rows) {
  mpz_class scale(1);
  for (const auto& row : rows)
    for (const auto& r : row) scale = lcm_denominator(scale, r);
  return scale;
}

std::optional<__int128> mpz_to_i128(const mpz_class& v) {
  const bool neg = v < 0;
  mpz_class a = ::abs(v);
  if (a >= (mpz_class(1) << 126)) return std::nullopt;
  mpz_class hi_z = a >> 64;
  // unsigned long is 64-bit here, so mpz_get_ui yields full 64-bit chunks.
  unsigned __int128 hi = mpz_get_ui(hi_z.get_mpz_t());
  unsigned __int128 lo = mpz_get_ui(a.get_mpz_t());
  unsigned __int128 mag = (hi << 64) | lo;
  __int128 out = static_cast<__int128>(mag);
  return neg ? -out : out;
}

}  // namespace

std::optional<ScaledRows> scale_rows(const std::vector<std::vector<Rational>>& rows) {
  mpz_class scale = common_scale(rows);
  ScaledRows out;
  out.scale = scale;
  out.rows.reserve(rows.size());
  // Partial sums range over +-(sum of per-item maxima); demand headroom.
  const mpz_class limit = (mpz_class(1) << 62) / (rows.size() + 1);
  for (const auto& row : rows) {
    std::vector<std::int64_t> scaled;
    scaled.reserve(row.size());
    for (const auto& r : row) {
      mpz_class v = r.num() * (scale / r.den());
      if (::abs(v) > limit) return std::nullopt;
      scaled.push_back(v.get_si());
    }
    out.rows.push_back(std::move(scaled));
  }
  return out;
}

std::optional<__int128> rational_times_scale_i128(const Rational& r, const mpz_class& scale) {
  if (scale % r.den() != 0) return std::nullopt;
  return mpz_to_i128(r.num() * (scale / r.den()));
}

std::optional<ScaledRows128> scale_rows_i128(const std::vector<std::vector<Rational>>& rows) {
  mpz_class scale = common_scale(rows);
  ScaledRows128 out;
  out.scale = scale;
  out.rows.reserve(rows.size());
  const mpz_class limit = (mpz_class(1) << 124) / (rows.size() + 1);
  for (const auto& row : rows) {
    std::vector<__int128> scaled;
    scaled.reserve(row.size());
    for (const auto& r : row) {
      mpz_class v = r.num() * (scale / r.den());
      if (::abs(v) > limit) return std::nullopt;
      auto w = mpz_to_i128(v);
      if (!w) return std::nullopt;
      scaled.push_back(*w);
    }
    out.rows.push_back(std::move(scaled));
  }
  return out;
}


namespace {

bool mask_in(const std::vector<std::uint32_t>& sorted, std::uint32_t m) {
  return std::binary_search(sorted.begin(), sorted.end(), m);
}

}  // namespace

std::optional<std::uint32_t> scan_lowest_hit(const std::vector<std::vector<Rational>>& rows,
                                                const std::vector<Rational>& target,
                                                const std::vector<std::uint32_t>& allowed,
                                                long coeff_bound) {
  const size_t dim = target.size();
  std::optional<std::uint32_t> worst;
  auto consider = [&](std::uint32_t mask) {
    if (!mask_in(allowed, mask) && (!worst || mask < *worst)) worst = mask;
  };

  // The scaled symbol sums are the integer coefficients a candidate relation
  // among the alphas would have; the power-of-base instantiation only rules
  // relations out up to |q| <= 4m, so anything larger must fail loudly.
  bool bound_violated = false;

  if (auto scaled = scale_rows(rows)) {
    std::vector<std::int64_t> t(dim);
    for (size_t d = 0; d < dim; ++d) {
      Rational s = target[d] * Rational(scaled->scale);
      auto v = s.num_i64();
      if (!v || !s.is_integer()) throw DomainError("target does not fit the integer scale");
      t[d] = *v;
    }
    gray_subset_scan(scaled->rows, [&](std::uint32_t mask, const std::vector<std::int64_t>& sum) {
      if (coeff_bound > 0)
        for (size_t d = 1; d < dim; ++d)
          if (sum[d] > coeff_bound || sum[d] < -coeff_bound) bound_violated = true;
      for (size_t d = 0; d < dim; ++d)
        if (sum[d] != t[d]) return;
      consider(mask);
    });
  } else if (auto scaled128 = scale_rows_i128(rows)) {
    std::vector<__int128> t(dim);
    for (size_t d = 0; d < dim; ++d) {
      auto v = rational_times_scale_i128(target[d], scaled128->scale);
      if (!v) throw DomainError("target does not fit the integer scale");
      t[d] = *v;
    }
    const __int128 bound = coeff_bound;
    gray_subset_scan(scaled128->rows, [&](std::uint32_t mask, const std::vector<__int128>& sum) {
      if (coeff_bound > 0)
        for (size_t d = 1; d < dim; ++d)
          if (sum[d] > bound || sum[d] < -bound) bound_violated = true;
      for (size_t d = 0; d < dim; ++d)
        if (sum[d] != t[d]) return;
      consider(mask);
    });
  } else {
    // Exact fallback for tables beyond both integer tiers.
    Rational bound(coeff_bound);
    gray_subset_scan(rows, [&](std::uint32_t mask, const std::vector<Rational>& sum) {
      if (coeff_bound > 0)
        for (size_t d = 1; d < dim; ++d)
          if (sum[d].abs() > bound) bound_violated = true;
      for (size_t d = 0; d < dim; ++d)
        if (!(sum[d] == target[d])) return;
      consider(mask);
    });
  }
  if (coeff_bound > 0 && bound_violated)
    throw DomainError("symbol coefficient bound 4m exceeded in subset scan");
  return worst;
}


}  // namespace estar
