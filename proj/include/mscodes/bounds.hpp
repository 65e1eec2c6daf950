#ifndef MSCODES_BOUNDS_HPP
#define MSCODES_BOUNDS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "multiset.hpp"

namespace mscodes {

/// One upper bound (or exact value) on S_q(n,t), the largest size of a
/// t-deletion-correcting code in S_{n,q}. `value` is empty exactly when the
/// bound does not apply to (n, q, t).
struct BoundReport {
  std::string name;
  std::optional<BigInt> value;
  std::string applicability;
  count_t n = 0;
  std::size_t q = 0;
  count_t t = 0;

  bool applicable() const noexcept { return value.has_value(); }
};

namespace detail {

inline void require_code_params(count_t n, std::size_t q) {
  if (n < 1) throw invalid_parameter("bounds need n >= 1");
  if (q < 2) throw invalid_parameter("bounds need q >= 2");
}

inline BoundReport make_report(std::string name, std::string applicability, count_t n, std::size_t q, count_t t,
                               std::optional<BigInt> value) {
  return BoundReport{std::move(name), std::move(value), std::move(applicability), n, q, t};
}

}  // namespace detail

/// Sphere packing for codes of minimum distance d: floor(|S_{n,q}| / |B_r|)
/// with r = floor((d-1)/2), using the smallest ball C(r+q-1, q-1).
inline BoundReport sphere_packing_bound_for_distance(count_t n, std::size_t q, count_t d) {
  detail::require_code_params(n, q);
  if (d < 1) throw invalid_parameter("minimum distance must be >= 1");
  const count_t r = std::min<count_t>((d - 1) / 2, n);
  return detail::make_report("sphere_packing_distance", "codes with minimum distance >= d", n, q, d,
                             space_size(n, q) / binomial(r + q - 1, q - 1));
}

/// Sphere packing with packing radius t: floor(|S_{n,q}| / C(t+q-1, q-1)),
/// with t capped at n (a radius past n covers the whole space).
/// This bounds codes of minimum distance >= 2t+1. A t-deletion-correcting
/// code is only guaranteed distance t+1, so this value is not an upper bound
/// on S_q(n,t) and best_upper_bound() does not use it.
inline BoundReport sphere_packing_bound(count_t n, std::size_t q, count_t t) {
  detail::require_code_params(n, q);
  return detail::make_report("sphere_packing_radius_t", "codes with minimum distance >= 2t+1", n, q, t,
                             space_size(n, q) / binomial(std::min<count_t>(t, n) + q - 1, q - 1));
}

/// Sphere packing applied to t-deletion-correcting codes (distance t+1).
inline BoundReport sphere_packing_deletion_bound(count_t n, std::size_t q, count_t t) {
  auto r = sphere_packing_bound_for_distance(n, q, t + 1);
  r.name = "sphere_packing";
  r.applicability = "all t (packing radius floor(t/2))";
  r.t = t;
  return r;
}

/// |C| <= |S_{n-t,q}|. For t > n every output can be empty, so the value is 1.
inline BoundReport projection_bound(count_t n, std::size_t q, count_t t) {
  detail::require_code_params(n, q);
  const count_t k = t >= n ? 0 : n - t;
  return detail::make_report("projection", "all t", n, q, t, space_size(k, q));
}

/// Exact value S_q(n, n-1) = q.
inline BoundReport extremal_exact_k1(count_t n, std::size_t q) {
  detail::require_code_params(n, q);
  return detail::make_report("extremal_exact_t_eq_n_minus_1", "t = n-1", n, q, n - 1, BigInt(q));
}

/// Exact value S_q(n, n-2) = q for q in {2, 3} and n >= 4.
inline BoundReport extremal_exact_k2_smallq(count_t n, std::size_t q) {
  detail::require_code_params(n, q);
  const count_t t = n >= 2 ? n - 2 : 0;
  std::optional<BigInt> v;
  if ((q == 2 || q == 3) && n >= 4) v = BigInt(q);
  return detail::make_report("extremal_exact_t_eq_n_minus_2", "t = n-2, q in {2,3}, n >= 4", n, q, t, v);
}

/// S_q(n, n-2) <= floor(q(n-1)/(n-q)) when n > q.
inline BoundReport reiman_bound_k2(count_t n, std::size_t q) {
  detail::require_code_params(n, q);
  const count_t t = n >= 2 ? n - 2 : 0;
  std::optional<BigInt> v;
  if (n > q && n >= 2) v = BigInt(q) * (n - 1) / (n - q);
  return detail::make_report("reiman_t_eq_n_minus_2", "t = n-2, n > q", n, q, t, v);
}

/// S_q(n, n-3) <= floor(q^2 (n-2) / (n-1-q)) when n >= q+2.
inline BoundReport k3_bound(count_t n, std::size_t q) {
  detail::require_code_params(n, q);
  const count_t t = n >= 3 ? n - 3 : 0;
  std::optional<BigInt> v;
  if (n >= q + 2 && n >= 3) v = BigInt(q) * q * (n - 2) / (n - 1 - q);
  return detail::make_report("reiman_t_eq_n_minus_3", "t = n-3, n >= q+2", n, q, t, v);
}

/// S_q(n,t) <= q^(n-t) for t < n.
inline BoundReport recursive_puncturing_bound(count_t n, std::size_t q, count_t t) {
  detail::require_code_params(n, q);
  std::optional<BigInt> v;
  if (t < n) v = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - t));
  return detail::make_report("recursive_puncturing", "t < n", n, q, t, v);
}

/// Exact binary optimum S_2(n,t) = ceil((n+1)/(t+1)).
///
/// A binary word is determined by its weight w in [0, n] and d(S,T) = |w(S)-w(T)|,
/// so a code is a set of weights with pairwise gaps >= t+1; the weights
/// 0, t+1, 2(t+1), ... are optimal, giving floor(n/(t+1)) + 1 words.
inline BoundReport binary_exact(count_t n, count_t t) {
  if (n < 1) throw invalid_parameter("binary_exact needs n >= 1");
  std::optional<BigInt> v;
  if (t >= 1) v = BigInt(n / (t + 1) + 1);
  return detail::make_report("binary_exact", "q = 2, t >= 1", n, 2, t, v);
}

struct TernarySingleDeletionBounds {
  BigInt lower;  // ceil(C(n+2,2)/3): some sum-mod-3 class reaches it
  BigInt upper;  // C(n+1,2): projection
};

inline TernarySingleDeletionBounds ternary_single_deletion_bounds(count_t n) {
  if (n < 1) throw invalid_parameter("ternary bounds need n >= 1");
  return {ceil_div(space_size(n, 3), 3), space_size(n - 1, 3)};
}

/// Every valid upper bound on S_q(n,t), applicable or not, in tie-break order.
inline std::vector<BoundReport> upper_bounds(count_t n, std::size_t q, count_t t) {
  detail::require_code_params(n, q);
  std::vector<BoundReport> out;
  {
    auto r = extremal_exact_k1(n, q);
    if (t != n - 1) r.value.reset();
    r.t = t;
    out.push_back(std::move(r));
  }
  {
    auto r = extremal_exact_k2_smallq(n, q);
    if (n < 2 || t != n - 2) r.value.reset();
    r.t = t;
    out.push_back(std::move(r));
  }
  {
    auto r = binary_exact(n, t);
    if (q != 2) r.value.reset();
    out.push_back(std::move(r));
  }
  {
    auto r = reiman_bound_k2(n, q);
    if (n < 2 || t != n - 2) r.value.reset();
    r.t = t;
    out.push_back(std::move(r));
  }
  {
    auto r = k3_bound(n, q);
    if (n < 3 || t != n - 3) r.value.reset();
    r.t = t;
    out.push_back(std::move(r));
  }
  out.push_back(projection_bound(n, q, t));
  out.push_back(sphere_packing_deletion_bound(n, q, t));
  out.push_back(recursive_puncturing_bound(n, q, t));
  return out;
}

/// The smallest applicable upper bound, named after the bound that attains it
/// (earlier entries of upper_bounds() win ties).
inline BoundReport best_upper_bound(count_t n, std::size_t q, count_t t) {
  std::optional<BoundReport> best;
  for (auto& r : upper_bounds(n, q, t)) {
    if (!r.applicable()) continue;
    if (!best || *r.value < *best->value) best = std::move(r);
  }
  best->applicability = "minimum over applicable bounds";
  return *best;  // projection always applies
}

}  // namespace mscodes

#endif  // MSCODES_BOUNDS_HPP
