#ifndef MSCODES_BIGINT_HPP
#define MSCODES_BIGINT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mscodes {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return v.convert_to<std::uint64_t>();
}

/// Ceiling division for non-negative operands.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace mscodes

#endif  // MSCODES_BIGINT_HPP
