#include <sstream>

#include "doctest.h"
#include "gsb/errors.hpp"
#include "gsb/set_family.hpp"
#include "oracles.hpp"

using namespace gsb;

namespace {

SetFamily disjoint_pairs() { return SetFamily{6, 2, 2, 4, {{0, 1}, {2, 3}, {4, 5}}, false}; }

// Smallest union over every W-subset, by plain recursion.
std::size_t brute_min_union(const SetFamily& f) {
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> pick;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (pick.size() == f.union_arity) {
      std::vector<bool> hit(f.ground_size, false);
      for (auto i : pick)
        for (auto e : f.sets[i]) hit[e] = true;
      best = std::min<std::size_t>(best, static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true)));
      return;
    }
    for (std::size_t i = start; i < f.sets.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace

TEST_CASE("verification of hand-built families") {
  auto f = disjoint_pairs();
  CHECK(verify_set_family(f).ok);
  CHECK(f.verified);

  auto dup = f;
  dup.sets.push_back(dup.sets[1]);
  auto r = verify_set_family(dup);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(dup.verified);
  CHECK(r.counterexample == std::vector<std::size_t>{1, 3});

  auto wrong = f;
  wrong.sets[0] = CoordSet{0, 1, 2};
  CHECK_FALSE(verify_set_family(wrong).ok);

  SetFamily big{10, 2, 2, 3, std::vector<CoordSet>(30, CoordSet{0, 1}), false};
  CHECK_THROWS_AS(verify_set_family(big, 10), ResourceError);
}

TEST_CASE("union arity") {
  CHECK(union_arity_for(0.3, 0.6) == 5);  // 0.7^5 = 0.168 < 0.2 <= 0.7^4
  CHECK(union_arity_for(0.5, 0.0) == 2);
  CHECK_THROWS_AS(union_arity_for(0.0, 0.5), InputError);
}

TEST_CASE("random families") {
  CHECK_THROWS_AS(build_set_family(10, 4, 4, 1), InputError);
  CHECK_THROWS_AS(build_set_family(10, 4, 10, 1), InputError);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SetFamily f = build_set_family(40, 12, 24, seed);
    CHECK(f.verified);
    CHECK(f.union_arity == 5);
    CHECK(f.sets.size() >= 8);
    CHECK(brute_min_union(f) >= 24);
    for (const auto& s : f.sets) CHECK(s.size() == 12);

    auto perturbed = f;
    perturbed.sets.push_back(perturbed.sets[0]);
    perturbed.sets.push_back(perturbed.sets[0]);
    perturbed.sets.push_back(perturbed.sets[0]);
    perturbed.sets.push_back(perturbed.sets[0]);
    CHECK_FALSE(verify_set_family(perturbed).ok);
    CHECK_FALSE(sample_check_set_family(perturbed, 5000, seed).ok);
  }
  CHECK(build_set_family(40, 12, 24, 3) == build_set_family(40, 12, 24, 3));
}

TEST_CASE("pairwise family") {
  SetFamily f = pairwise_family_warmup2(10, 2, 2, 4, 1);
  CHECK(f.verified);
  CHECK(f.ground_size == 8);
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    for (std::size_t j = i + 1; j < f.sets.size(); ++j) {
      CHECK(f.sets[i].unite(f.sets[j]).size() >= 4);
      CHECK(f.sets[i].unite(f.sets[j]).size() - f.sets[i].size() >= 4 - 2);
    }
  // Pairwise disjointness is forced when beta_n = 2 alpha_n.
  CHECK(f.sets.size() == 4);

  SetFamily g = pairwise_family_warmup2(48, 12, 21, 27, 5);
  CHECK(verify_set_family(g).ok);
  CHECK(g.sets.size() >= 2);
}

TEST_CASE("subset enumeration") {
  bool complete = false;
  auto all = enumerate_or_sample_subsets(7, 5, 100, 1, complete);
  CHECK(complete);
  CHECK(all.size() == oracle::binom(7, 5));
  CHECK(all.front() == CoordSet{0, 1, 2, 3, 4});
  auto some = enumerate_or_sample_subsets(20, 10, 50, 1, complete);
  CHECK_FALSE(complete);
  CHECK(some.size() == 50);
}

TEST_CASE("family text format") {
  SetFamily f = build_set_family(40, 12, 24, 2);
  std::ostringstream out;
  write_family_text(out, f);
  std::istringstream in(out.str());
  SetFamily back = read_family_text(in);
  CHECK(back.sets == f.sets);
  CHECK(back.union_arity == f.union_arity);
  CHECK(back.union_floor == f.union_floor);
  CHECK_FALSE(back.verified);

  std::istringstream bad("6 2 4 2 2\n0 1\n0 9\n");
  CHECK_THROWS_AS(read_family_text(bad), ParseError);
  std::istringstream shortf("6 2 4 2 3\n0 1\n2 3\n");
  CHECK_THROWS_AS(read_family_text(shortf), ParseError);
}
