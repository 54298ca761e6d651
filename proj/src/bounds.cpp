#include "gsb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "gsb/errors.hpp"

namespace gsb::bounds {
namespace {

double xlogx(double x, double base_log) { return x <= 0.0 ? 0.0 : x * std::log(x) / base_log; }

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double generalized_singleton_radius(std::size_t L, double R, double eps) {
  if (L < 1) throw InputError("list size L must be at least 1");
  if (R < 0.0 || eps < 0.0 || R + eps > 1.0 + kTolerance) {
    throw InputError("need R >= 0, eps >= 0 and R + eps <= 1");
  }
  const double Ld = static_cast<double>(L);
  return Ld / (Ld + 1.0) * std::max(0.0, 1.0 - R - eps);
}

double q_ary_entropy(std::uint64_t q, double x) {
  if (q < 2) throw InputError("alphabet size must be at least 2");
  if (!(x >= 0.0 && x <= 1.0)) throw InputError("entropy argument must lie in [0, 1]");
  const double lq = std::log(static_cast<double>(q));
  const double linear = x == 0.0 ? 0.0 : x * std::log(static_cast<double>(q - 1)) / lq;
  return linear - xlogx(x, lq) - xlogx(1.0 - x, lq);
}

double binary_entropy(double x) { return q_ary_entropy(2, x); }

CapacityReport capacity_check(const BoundParams& params) {
  CapacityReport rep;
  rep.p = generalized_singleton_radius(params.L, params.R, params.eps);
  rep.entropy = q_ary_entropy(params.q, rep.p);
  rep.margin = rep.entropy - (1.0 - params.R);
  rep.verdict = rep.margin > kTolerance ? CapacityVerdict::violates_capacity : CapacityVerdict::consistent;

  std::ostringstream note;
  note << "h_q(p) - (1-R) = " << fmt_double(rep.margin) << " (o(1) slack not enforced); ";
  const double inv = params.eps > 0.0 ? 1.0 / params.eps : std::numeric_limits<double>::infinity();
  note << "capacity alone forces q >= 2^{Omega_R(min(L, 1/eps))} with min(L, 1/eps) = "
       << fmt_double(std::min(static_cast<double>(params.L), inv));
  rep.note = note.str();
  return rep;
}

double chernoff_tail(double alpha, std::uint64_t m, double delta) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("chernoff_tail: alpha must lie in (0, 1]");
  if (m < 1) throw InputError("chernoff_tail: m must be at least 1");
  if (!(delta > 0.0)) throw InputError("chernoff_tail: delta must be positive");
  return std::exp(-delta * delta / (2.0 + delta) * alpha * static_cast<double>(m));
}

BinomialBounds binomial_entropy_bounds(std::size_t n, double alpha) {
  if (n > kBinomialMaxN) throw InputError("binomial_entropy_bounds: n above cap " + std::to_string(kBinomialMaxN));
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("binomial_entropy_bounds: alpha must lie in [0, 1]");
  BinomialBounds b;
  b.n = n;
  b.radius = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n) + kTolerance));
  b.radius = std::min(b.radius, n);

  // C(n, i) row by the multiplicative recurrence; exact in 128 bits for n <= 64.
  unsigned __int128 c = 1;
  for (std::size_t i = 0; i <= b.radius; ++i) {
    if (i > 0) c = c * (n - i + 1) / i;
    b.exact_sum += c;
    if (i == b.radius) b.largest = c;
  }
  b.upper = std::exp2(binary_entropy(std::min(alpha, 0.5)) * static_cast<double>(n));
  return b;
}

std::string to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::vector<BoundRow> theorem_bound_table(const std::vector<GridPoint>& grid) {
  std::vector<BoundRow> rows;
  rows.reserve(grid.size());
  for (const auto& g : grid) {
    if (!(g.eps > 0.0)) throw InputError("theorem_bound_table: eps must be positive");
    BoundRow r;
    r.L = g.L;
    r.R = g.R;
    r.eps = g.eps;
    r.p = generalized_singleton_radius(g.L, g.R, g.eps);
    r.inv_eps = 1.0 / g.eps;
    r.min_L_inv_eps = std::min(static_cast<double>(g.L), r.inv_eps);
    rows.push_back(r);
  }
  return rows;
}

void write_bound_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << "L,R,eps,p,inv_eps,min_L_inv_eps\n";
  for (const auto& r : rows) {
    out << r.L << ',' << fmt_double(r.R) << ',' << fmt_double(r.eps) << ',' << fmt_double(r.p) << ','
        << fmt_double(r.inv_eps) << ',' << fmt_double(r.min_L_inv_eps) << '\n';
  }
}

std::vector<BoundRow> read_bound_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "L,R,eps,p,inv_eps,min_L_inv_eps") {
    throw ParseError(1, "unexpected bound table header");
  }
  std::vector<BoundRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw ParseError(lineno, "expected 6 columns");
    try {
      BoundRow r;
      r.L = std::stoul(cells[0]);
      r.R = std::stod(cells[1]);
      r.eps = std::stod(cells[2]);
      r.p = std::stod(cells[3]);
      r.inv_eps = std::stod(cells[4]);
      r.min_L_inv_eps = std::stod(cells[5]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "non-numeric cell");
    }
  }
  return rows;
}

}  // namespace gsb::bounds
