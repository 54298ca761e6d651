#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gsb::bounds {

/// Absolute tolerance used for real-valued comparisons in this module.
inline constexpr double kTolerance = 1e-9;

struct BoundParams {
  std::size_t L = 1;
  double R = 0.0;
  double eps = 0.0;
  std::uint64_t q = 2;
  std::size_t n = 1;
};

/// L/(L+1) * (1 - R - eps).
double generalized_singleton_radius(std::size_t L, double R, double eps);

/// h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0.
double q_ary_entropy(std::uint64_t q, double x);
double binary_entropy(double x);

enum class CapacityVerdict { consistent, violates_capacity };

struct CapacityReport {
  double p = 0.0;
  double entropy = 0.0;  ///< h_q(p)
  double margin = 0.0;   ///< h_q(p) - (1 - R); positive means the radius exceeds capacity
  CapacityVerdict verdict = CapacityVerdict::consistent;
  std::string note;
};

CapacityReport capacity_check(const BoundParams& params);

/// exp(-delta^2 / (2 + delta) * alpha * m), the binomial upper-tail bound.
double chernoff_tail(double alpha, std::uint64_t m, double delta);

struct BinomialBounds {
  std::size_t n = 0;
  std::size_t radius = 0;          ///< floor(alpha n)
  unsigned __int128 largest = 0;   ///< C(n, radius)
  unsigned __int128 exact_sum = 0; ///< sum_{i <= radius} C(n, i)
  double upper = 0.0;              ///< 2^{h(min(alpha, 1/2)) n}
};

inline constexpr std::size_t kBinomialMaxN = 64;

/// Exact ball volume next to its entropy upper bound. Throws InputError for
/// n above kBinomialMaxN or alpha outside [0, 1].
BinomialBounds binomial_entropy_bounds(std::size_t n, double alpha);

std::string to_string(unsigned __int128 v);

struct BoundRow {
  std::size_t L = 1;
  double R = 0.0;
  double eps = 0.0;
  double p = 0.0;
  double inv_eps = 0.0;        ///< exponent shape of the 2^{alpha/eps} lower bound
  double min_L_inv_eps = 0.0;  ///< exponent shape of the capacity-based lower bound

  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct GridPoint {
  std::size_t L;
  double R;
  double eps;
};

/// Exponent shapes only; the unknown constants are never filled in.
std::vector<BoundRow> theorem_bound_table(const std::vector<GridPoint>& grid);

void write_bound_csv(std::ostream& out, const std::vector<BoundRow>& rows);
std::vector<BoundRow> read_bound_csv(std::istream& in);

}  // namespace gsb::bounds
