#include <map>

#include "doctest.h"
#include "gsb/constructions.hpp"
#include "gsb/errors.hpp"
#include "oracles.hpp"

using namespace gsb;

namespace {
Word W(const char* s) { return Word::from_digits(s); }
}  // namespace

TEST_CASE("target size") {
  CHECK(target_code_size(2, 4, Rational(1, 2)) == 4);
  CHECK(target_code_size(16, 8, Rational(1, 4)) == 256);
  CHECK(target_code_size(4, 3, Rational(1, 2)) == 8);
  CHECK(target_code_size(2, 3, Rational(1, 2)) == 2);  // floor(2^1.5)
  CHECK(target_code_size(3, 5, Rational(1, 3)) == 6);  // floor(3^{5/3}) = floor(6.24)
  CHECK(target_list_radius(2, Rational(1, 4), Rational(3, 16)) == Rational(3, 8));
}

TEST_CASE("random code") {
  Code c = random_code({2, 4, Rational(1, 2), Rational(0), 1, 1});
  CHECK(c.size() == 4);
  CHECK(c.meta().seed == 1u);
  CHECK(c == random_code({2, 4, Rational(1, 2), Rational(0), 1, 1}));
  CHECK_FALSE(c == random_code({2, 4, Rational(1, 2), Rational(0), 1, 2}));
  CHECK_THROWS_AS(random_code({2, 30, Rational(1), Rational(0), 1, 1}), ResourceError);
  CHECK_THROWS_AS(random_code({2, 3, Rational(3, 2), Rational(0), 1, 1}), InputError);

  // Chi-square on the symbol histogram, 8 cells, ~10^4 draws.
  Code big = random_code({8, 10, Rational(4, 10), Rational(0), 1, 99});
  std::map<Symbol, double> hist;
  double total = 0;
  for (const auto& w : big.words())
    for (auto s : w) {
      hist[s] += 1;
      total += 1;
    }
  double chi = 0;
  for (Symbol s = 0; s < 8; ++s) chi += (hist[s] - total / 8) * (hist[s] - total / 8) / (total / 8);
  CHECK(total >= 10000);
  CHECK(chi < 24.3);  // 7 dof, p = 0.001
}

TEST_CASE("expurgation") {
  Code rep(2, 3, {W("000"), W("111")});
  auto same = expurgate_violations(rep, {Rational(1, 3), 1, DecodingMode::ordinary});
  CHECK(same.code == rep);
  CHECK(same.removed.empty());

  Code c(2, 3, {W("000"), W("001"), W("010"), W("100")});
  RadiusQuery q{Rational(1, 3), 2, DecodingMode::ordinary};
  auto r = expurgate_violations(c, q);
  CHECK_FALSE(r.removed.empty());
  CHECK(is_list_decodable(r.code, q).decodable);
  CHECK(oracle::brute_decodable(r.code, 2, 1, false));
  CHECK(r.kept.size() + r.removed.size() == c.size());

  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    Code x = oracle::random_code(rng, 3, 5, 25);
    for (auto mode : {DecodingMode::ordinary, DecodingMode::average_radius}) {
      RadiusQuery qq{Rational(2, 5), 2, mode};
      auto e = expurgate_violations(x, qq);
      CHECK(oracle::brute_decodable(e.code, 2, violation_threshold(qq, 5), mode == DecodingMode::average_radius));
    }
  }
}

TEST_CASE("greedy distance subcode") {
  Code c(2, 3, {W("000"), W("001"), W("111")});
  CHECK(greedy_distance_subcode(c, Rational(2, 3)) == Code(2, 3, {W("000"), W("111")}));
  Code rep(2, 3, {W("000"), W("111")});
  CHECK(greedy_distance_subcode(rep, Rational(2, 3)) == rep);
}

TEST_CASE("neighborhood bound") {
  auto r = neighborhood_bound_check(Code(2, 3, {W("000"), W("111")}), Rational(1, 3), 1);
  CHECK(r.max_count == 0);
  CHECK(r.holds);
  CHECK(r.alpha == Rational(1, 2));
  CHECK(r.bound == 3);
  CHECK(neighborhood_bound_check(Code(2, 3, {W("010")}), Rational(1, 3), 1).max_count == 0);
  CHECK_THROWS_AS(neighborhood_bound_check(Code(2, 2, {W("00"), W("01"), W("10"), W("11")}), Rational(1, 2), 1),
                  InputError);

  // Greedy subcode at the attack's assumed distance keeps at least |C| / (L' + 1).
  Rng rng(8);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 10; ++t) {
    Code x = oracle::random_code(rng, 4, 6, 24);
    RadiusQuery q{Rational(1, 3), 2, DecodingMode::ordinary};
    auto e = expurgate_violations(x, q);
    auto rep = neighborhood_bound_check(e.code, q.p, q.L);
    CHECK(rep.holds);
    const Code sub = greedy_distance_subcode(e.code, rep.alpha);
    CHECK(sub.size() * (rep.bound + 1) >= e.code.size());
    ++checked;
  }
}

TEST_CASE("average-radius expurgation") {
  Code far(2, 6, {W("000000"), W("111111")});
  CHECK(avg_radius_expurgate(far, Rational(1, 3), false).code == far);

  // Two words at distance 2 in a verified (1/3, 2)-average-radius code.
  Code pair(4, 6, {W("000000"), W("000011"), W("333333"), W("121212")});
  RadiusQuery q{Rational(1, 3), 2, DecodingMode::average_radius};
  REQUIRE(is_list_decodable(pair, q).decodable);
  auto r = avg_radius_expurgate(pair, q.p, true);
  CHECK(r.removed == std::vector<std::size_t>{1});

  Rng rng(12);
  int verified = 0;
  for (int t = 0; t < 200 && verified < 15; ++t) {
    Code x = expurgate_violations(oracle::random_code(rng, 4, 6, 16), q).code;
    if (!is_list_decodable(x, q).decodable) continue;
    ++verified;
    auto e = avg_radius_expurgate(x, q.p, true);
    CHECK(2 * e.code.size() >= x.size());
  }
  CHECK(verified >= 5);
}
