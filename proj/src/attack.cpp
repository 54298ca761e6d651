#include "gsb/attack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "gsb/constructions.hpp"
#include "gsb/errors.hpp"

namespace gsb {
namespace {

constexpr double kChainTolerance = 1e-12;

using I64 = std::int64_t;

I64 as_int(std::size_t v) { return static_cast<I64>(v); }

// Rounds x down (or up) to a multiple of `unit`.
Rational round_to(const Rational& x, const Rational& unit, bool up) {
  const Rational steps = x / unit;
  return Rational(up ? steps.ceil() : steps.floor()) * unit;
}

// Integer value of a rational that must be integral.
std::size_t exact_count(const Rational& r, const char* what) {
  if (!r.is_integer() || r < Rational(0)) {
    throw ParameterError(std::string(what) + " = " + r.str() + " is not a non-negative integer");
  }
  return static_cast<std::size_t>(r.num());
}

CoordSet map_to_ground(const CoordSet& member, const CoordSet& ground) {
  std::vector<std::size_t> out;
  out.reserve(member.size());
  for (auto e : member) out.push_back(ground[e]);
  return CoordSet(std::move(out));
}

DistanceWitness make_witness(const Code& c, std::size_t a, std::size_t b, std::vector<std::size_t> sets,
                             const SetFamily& family) {
  DistanceWitness w;
  w.first = a;
  w.second = b;
  CoordSet u;
  for (auto s : sets) u = u.unite(family.sets[s]);
  w.union_size = u.size();
  w.set_indices = std::move(sets);
  w.distance = hamming_distance(c[a], c[b]);
  return w;
}

std::vector<std::size_t> sizes_of(const PigeonholeResult& ph) {
  std::vector<std::size_t> out;
  for (const auto& cls : ph.classes) out.push_back(cls.size());
  return out;
}

// First two entries of a class with different partners, as a pair of
// positions, or nullopt if every entry shares one partner.
std::optional<std::pair<std::size_t, std::size_t>> distinct_pair(std::span<const PartnerEntry> cls) {
  for (std::size_t j = 1; j < cls.size(); ++j) {
    if (cls[j].partner != cls[0].partner) return std::pair{std::size_t{0}, j};
  }
  return std::nullopt;
}

// Shared tail of both warmups: popular codeword, pigeonhole on I_0, and a
// center copying f1 on I_0 and c elsewhere.
void finish_pair_attack(AttackReport& rep, const Code& c, const SetFamily& family, const CoordSet& ground,
                        const CoordSet& I0, Provenance provenance, std::size_t threshold) {
  rep.family_size = family.sets.size();
  rep.union_arity = 2;
  rep.need = 2;
  if (c.size() < 2) {
    rep.failed_stage = AttackStage::popular_codeword;
    return;
  }
  const auto pop = find_popular_codeword(c, family, ground);
  rep.popular = pop.codeword;
  rep.best_fc = pop.partners.size();
  if (rep.best_fc < rep.need) {
    rep.failed_stage = AttackStage::popular_codeword;
    return;
  }
  const auto ph = pigeonhole_I0(pop.partners, c, I0, rep.need);
  rep.class_sizes = sizes_of(ph);
  rep.max_class = ph.max_class;
  if (!ph.chosen) {
    rep.failed_stage = AttackStage::pigeonhole_I0;
    return;
  }
  for (const auto& cls : ph.classes) {
    if (cls.size() < rep.need) continue;
    auto pair = distinct_pair(cls);
    if (!pair) {
      if (!rep.witness) rep.witness = make_witness(c, pop.codeword, cls[0].partner, {cls[0].set_index, cls[1].set_index}, family);
      continue;
    }
    const std::size_t f1 = cls[pair->first].partner;
    const std::size_t f2 = cls[pair->second].partner;
    Word y = c[pop.codeword];
    for (auto i : I0) y[i] = c[f1][i];
    Certificate cert;
    cert.mode = DecodingMode::average_radius;
    cert.provenance = provenance;
    cert.codewords = {pop.codeword, f1, f2};
    for (auto idx : cert.codewords) cert.distances.push_back(hamming_distance(y, c[idx]));
    cert.center = std::move(y);
    cert.threshold = threshold;
    const std::size_t total = std::accumulate(cert.distances.begin(), cert.distances.end(), std::size_t{0});
    if (total > threshold) {
      throw InternalError("warmup center has total distance " + std::to_string(total) + " above " +
                          std::to_string(threshold));
    }
    rep.outcome = AttackOutcome::certificate;
    rep.failed_stage = AttackStage::none;
    rep.certificate = std::move(cert);
    rep.witness.reset();
    return;
  }
  rep.failed_stage = AttackStage::distinctness;
}

void check_emitted(const Code& c, const AttackReport& rep) {
  if (!rep.certificate) return;
  auto chk = verify_certificate(c, *rep.certificate);
  if (!chk.ok) throw InternalError("emitted certificate does not verify: " + chk.reason);
}

}  // namespace

AttackParams derive_params(std::size_t n, std::size_t L, const Rational& R, const Rational& eps) {
  if (L < 1) throw InputError("list size L must be at least 1");
  if (n < L + 2) throw InputError("block length must be at least L + 2");
  if (R <= Rational(0) || R >= Rational(1) || eps <= Rational(0) || eps >= Rational(1)) {
    throw InputError("R and eps must lie in (0, 1)");
  }
  const I64 Li = as_int(L);
  const I64 ni = as_int(n);
  const Rational unit(Li + 1, ni);

  AttackParams ap;
  ap.n = n;
  ap.L = L;
  ap.R = round_to(R, unit, false);
  ap.eps = round_to(eps + (R - ap.R), unit, true);
  if (ap.R <= Rational(0)) throw ParameterError("rate " + R.str() + " rounds to zero at n = " + std::to_string(n));
  if (ap.R + ap.eps >= Rational(1)) throw ParameterError("rounded R + eps reaches 1");

  const Rational nr(ni);
  const std::size_t Rn = exact_count(ap.R * nr, "R n");
  const std::size_t epsn = exact_count(ap.eps * nr, "eps n");
  ap.p = Rational(Li, Li + 1) * (Rational(1) - ap.R - ap.eps);
  ap.pn = exact_count(ap.p * nr, "p n");
  ap.k = Rn;

  const I64 d1_num = ni - as_int(Rn) - 5 * as_int(epsn);
  if (d1_num < 0) {
    throw ParameterError("eps = " + ap.eps.str() + " too large: |I_j| = (1 - R - 5 eps) n / (L + 1) is negative");
  }
  ap.d1 = exact_count(Rational(d1_num, Li + 1), "|I_j|");
  ap.d0 = exact_count(Rational(4 * Li * as_int(epsn), Li + 1), "|I_0|");
  if (Rn < 2) throw ParameterError("R n must be at least 2 so that a_F = R n - 1 is positive");
  ap.a_F = Rn - 1;

  if (ap.d0 + L * ap.d1 != ap.pn) {
    throw ParameterError("|I_0| + L |I_j| = " + std::to_string(ap.d0 + L * ap.d1) + " differs from p n = " +
                         std::to_string(ap.pn));
  }
  if (ni - as_int(ap.d0) - as_int(ap.d1) - as_int(ap.a_F) > as_int(ap.pn)) {
    throw ParameterError("n - |I_0| - |I_j| - a_F exceeds p n");
  }
  if (ap.d0 > 4 * epsn) throw ParameterError("|I_0| exceeds 4 eps n");

  const Rational pL = ap.p.pow(static_cast<unsigned>(L));
  ap.a_union = static_cast<std::size_t>(
      std::max<I64>(0, (Rational(1) - ap.p - pL / Rational(4 * Li)).floor_times(ni)));
  ap.min_distance = static_cast<std::size_t>((ap.p + pL / Rational(2 * Li)).ceil_times(ni));
  ap.union_margin = Rational(as_int(ap.a_union)) > (Rational(1) - ap.p - pL / Rational(2 * Li)) * nr;

  std::size_t start = 0;
  ap.intervals.push_back(CoordSet::range(start, start + ap.d0));
  start += ap.d0;
  for (std::size_t j = 1; j <= L; ++j) {
    ap.intervals.push_back(CoordSet::range(start, start + ap.d1));
    start += ap.d1;
  }
  ap.star = CoordSet::range(0, ap.pn);
  ap.ground = CoordSet::range(ap.pn, n);

  const double m = static_cast<double>(n - ap.pn);
  const double Rd = ap.R.to_double();
  const double Ld = static_cast<double>(L);
  ap.alpha = static_cast<double>(ap.a_F) / m;
  ap.beta = static_cast<double>(ap.a_union) / m;
  ap.beta_ceiling = 1.0 - std::pow((1.0 - Rd) / 4.0, Ld) / (4.0 * Ld);
  ap.alpha_floor = (Ld + 1.0) * Rd / (1.0 + (Ld + 1.0) * Rd);
  ap.chain_holds = ap.alpha > 0.0 && ap.alpha + kChainTolerance >= ap.alpha_floor && ap.alpha < ap.beta &&
                   ap.beta <= ap.beta_ceiling + kChainTolerance && ap.beta < 1.0;
  return ap;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::warmup1: return "warmup1";
    case Provenance::warmup2: return "warmup2";
    case Provenance::general: return "general";
    case Provenance::singleton_witness: return "singleton_witness";
  }
  return "general";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "warmup1") return Provenance::warmup1;
  if (text == "warmup2") return Provenance::warmup2;
  if (text == "general") return Provenance::general;
  if (text == "singleton_witness" || text == "singleton") return Provenance::singleton_witness;
  throw InputError("unknown provenance '" + std::string(text) + "'");
}

std::string_view to_string(AttackOutcome o) { return o == AttackOutcome::certificate ? "certificate" : "stage_failed"; }

std::string_view to_string(AttackStage s) {
  switch (s) {
    case AttackStage::none: return "none";
    case AttackStage::popular_codeword: return "popular_codeword";
    case AttackStage::pigeonhole_I0: return "pigeonhole_I0";
    case AttackStage::distinctness: return "distinctness";
  }
  return "none";
}

CertificateCheck verify_certificate(const Code& c, const Certificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (cert.codewords.size() < 2) return fail("fewer than two codewords");
  if (cert.distances.size() != cert.codewords.size()) return fail("distance list does not match codeword list");
  if (cert.center.size() != c.n()) return fail("center has the wrong length");
  for (auto s : cert.center) {
    if (s >= c.q()) return fail("center symbol outside the alphabet");
  }
  for (std::size_t i = 0; i < cert.codewords.size(); ++i) {
    if (cert.codewords[i] >= c.size()) return fail("codeword index " + std::to_string(cert.codewords[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (cert.codewords[i] == cert.codewords[j]) return fail("codeword index repeated");
    }
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < cert.codewords.size(); ++i) {
    // Straight coordinate count, independent of the search code.
    const Word& w = c[cert.codewords[i]];
    std::size_t d = 0;
    for (std::size_t t = 0; t < c.n(); ++t) d += w[t] != cert.center[t] ? 1 : 0;
    if (d != cert.distances[i]) return fail("recorded distance " + std::to_string(cert.distances[i]) + " but found " + std::to_string(d));
    if (cert.mode == DecodingMode::ordinary && d > cert.threshold) {
      return fail("distance " + std::to_string(d) + " exceeds threshold " + std::to_string(cert.threshold));
    }
    total += d;
  }
  if (cert.mode == DecodingMode::average_radius && total > cert.threshold) {
    return fail("total distance " + std::to_string(total) + " exceeds threshold " + std::to_string(cert.threshold));
  }
  return {true, {}};
}

PopularCodeword find_popular_codeword(const Code& c, const SetFamily& family, const CoordSet& ground) {
  if (c.size() == 0) throw InputError("find_popular_codeword: empty code");
  if (family.ground_size > ground.size()) throw InputError("family ground set larger than the coordinate map");
  std::vector<CoordSet> coords;
  coords.reserve(family.sets.size());
  for (const auto& s : family.sets) {
    if (s.bound() > ground.size()) throw InputError("family member outside the coordinate map");
    coords.push_back(map_to_ground(s, ground));
  }

  std::vector<std::size_t> fc(c.size(), 0);
  std::unordered_map<Word, std::size_t, WordHash> groups;
  std::vector<Word> keys(c.size());
  for (const auto& A : coords) {
    groups.clear();
    for (std::size_t i = 0; i < c.size(); ++i) {
      keys[i] = restricted(c[i], A);
      ++groups[keys[i]];
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (groups[keys[i]] >= 2) ++fc[i];
    }
  }

  PopularCodeword out;
  out.codeword = static_cast<std::size_t>(std::max_element(fc.begin(), fc.end()) - fc.begin());
  const Word& c0 = c[out.codeword];
  for (std::size_t s = 0; s < coords.size(); ++s) {
    const Word key = restricted(c0, coords[s]);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != out.codeword && restricted(c[j], coords[s]) == key) {
        out.partners.push_back({s, j});
        break;
      }
    }
  }
  return out;
}

PigeonholeResult pigeonhole_I0(std::span<const PartnerEntry> partners, const Code& c, const CoordSet& I0,
                               std::size_t need) {
  PigeonholeResult out;
  std::unordered_map<Word, std::size_t, WordHash> slot;
  for (const auto& e : partners) {
    auto [it, fresh] = slot.try_emplace(restricted(c[e.partner], I0), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(e);
  }
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    out.max_class = std::max(out.max_class, out.classes[i].size());
    if (!out.chosen && out.classes[i].size() >= need) out.chosen = i;
  }
  return out;
}

Selection select_distinct(std::span<const PartnerEntry> cls, const Code& c, std::size_t c0, const SetFamily& family,
                          std::size_t L) {
  const std::size_t W = family.union_arity;
  const std::size_t take = W * L;
  if (cls.size() < take) throw InputError("collision class smaller than W L");

  Selection out;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < take; ++i) {
    auto& sets = seen[cls[i].partner];
    sets.push_back(cls[i].set_index);
    if (sets.size() == 1 && out.chosen.size() < L) out.chosen.push_back(cls[i]);
    if (sets.size() == W && !out.witness) out.witness = make_witness(c, c0, cls[i].partner, sets, family);
  }
  if (out.chosen.size() < L) {
    if (!out.witness) throw InternalError("collision class of W L entries has neither L distinct partners nor a W-fold repeat");
    out.chosen.clear();
  }
  return out;
}

Certificate build_center_general(const Code& c, std::size_t c0, std::span<const PartnerEntry> chosen,
                                 const SetFamily& family, const AttackParams& params) {
  if (chosen.size() != params.L) throw InputError("need exactly L chosen partners");
  (void)family;
  Word y = c[c0];
  for (auto i : params.intervals[0]) y[i] = c[chosen[0].partner][i];
  for (std::size_t j = 1; j <= params.L; ++j) {
    for (auto i : params.intervals[j]) y[i] = c[chosen[j - 1].partner][i];
  }

  Certificate cert;
  cert.mode = DecodingMode::ordinary;
  cert.provenance = Provenance::general;
  cert.threshold = params.pn;
  cert.codewords.push_back(c0);
  for (const auto& e : chosen) cert.codewords.push_back(e.partner);
  for (auto idx : cert.codewords) cert.distances.push_back(hamming_distance(y, c[idx]));
  cert.center = std::move(y);

  if (cert.distances[0] > params.star.size()) throw InternalError("center too far from c_0");
  const std::size_t partner_bound = params.n - params.d0 - params.d1 - params.a_F;
  for (std::size_t j = 1; j < cert.distances.size(); ++j) {
    if (cert.distances[j] > partner_bound || cert.distances[j] > params.pn) {
      throw InternalError("center too far from c_" + std::to_string(j) + ": " + std::to_string(cert.distances[j]));
    }
  }
  return cert;
}

AttackReport run_general_attack(const Code& c, std::size_t L, const Rational& R, const Rational& eps,
                                const AttackOptions& opts) {
  AttackReport rep;
  rep.attack = "general";
  const AttackParams params = derive_params(c.n(), L, R, eps);
  if (params.n != c.n()) throw InternalError("parameter block length mismatch");
  rep.params = params;

  std::vector<std::size_t> kept(c.size());
  std::iota(kept.begin(), kept.end(), std::size_t{0});
  if (auto d = min_distance(c); d && *d < params.min_distance) {
    kept = greedy_distance_indices(c, params.min_distance);
    rep.subcode_applied = true;
  }
  const Code work = c.subcode(kept);
  rep.subcode_size = work.size();

  SetFamily family;
  try {
    FamilyOptions fo;
    fo.cap = opts.family_cap;
    fo.min_target = std::min(fo.min_target, opts.family_cap);
    fo.max_tuples = opts.max_tuples;
    family = build_set_family(c.n() - params.pn, params.a_F, params.a_union, opts.seed, fo);
  } catch (const InputError& e) {
    throw ParameterError(std::string("set family parameters: ") + e.what());
  }
  rep.family_size = family.sets.size();
  rep.union_arity = family.union_arity;
  rep.need = family.union_arity * L;
  if (params.d0 > 0) {
    const double ratio = static_cast<double>(rep.family_size) / (2.0 * static_cast<double>(rep.need));
    rep.implied_q_floor = std::pow(ratio, 1.0 / static_cast<double>(params.d0));
  }
  rep.figures = {{"a_F", as_int(params.a_F)}, {"a_union", as_int(params.a_union)}, {"d0", as_int(params.d0)},
                 {"d1", as_int(params.d1)}, {"pn", as_int(params.pn)}, {"min_distance", as_int(params.min_distance)}};

  if (work.size() < 2) {
    rep.failed_stage = AttackStage::popular_codeword;
    return rep;
  }
  const auto pop = find_popular_codeword(work, family, params.ground);
  rep.popular = kept[pop.codeword];
  rep.best_fc = pop.partners.size();
  if (rep.best_fc < rep.need) {
    rep.failed_stage = AttackStage::popular_codeword;
    return rep;
  }

  const auto ph = pigeonhole_I0(pop.partners, work, params.intervals[0], rep.need);
  rep.class_sizes = sizes_of(ph);
  rep.max_class = ph.max_class;
  if (!ph.chosen) {
    const long double room = static_cast<long double>(rep.need) *
                             std::pow(static_cast<long double>(c.q()), static_cast<long double>(params.d0));
    if (room < static_cast<long double>(rep.best_fc)) throw InternalError("pigeonhole failed below its counting bound");
    rep.failed_stage = AttackStage::pigeonhole_I0;
    return rep;
  }

  for (const auto& cls : ph.classes) {
    if (cls.size() < rep.need) continue;
    const Selection sel = select_distinct(cls, work, pop.codeword, family, L);
    if (sel.chosen.empty()) {
      if (!rep.witness && sel.witness) {
        DistanceWitness w = *sel.witness;
        w.first = kept[w.first];
        w.second = kept[w.second];
        rep.witness = w;
      }
      continue;
    }
    Certificate cert = build_center_general(work, pop.codeword, sel.chosen, family, params);
    for (auto& idx : cert.codewords) idx = kept[idx];
    rep.certificate = std::move(cert);
    rep.outcome = AttackOutcome::certificate;
    rep.failed_stage = AttackStage::none;
    rep.witness.reset();
    check_emitted(c, rep);
    return rep;
  }
  rep.failed_stage = AttackStage::distinctness;
  return rep;
}

AttackReport run_warmup1(const Code& c, const AttackOptions& opts) {
  AttackReport rep;
  rep.attack = "warmup1";
  if (c.size() == 0) throw InputError("warmup1: empty code");
  const std::size_t n = c.n();
  if (n < 3) throw ParameterError("warmup1 needs n >= 3");
  const std::size_t k = integer_log(c.q(), c.size());
  rep.figures = {{"k", as_int(k)}, {"i0", 2}, {"total_bound", as_int(2 * (n > k ? n - k : 0))}};
  if (k == 0) {
    rep.failed_stage = AttackStage::popular_codeword;
    rep.need = 2;
    return rep;
  }
  if (k - 1 > n - 2) throw ParameterError("warmup1: k - 1 exceeds n - 2");

  SetFamily family;
  family.ground_size = n - 2;
  family.member_size = k - 1;
  family.union_arity = 2;
  family.union_floor = k;
  family.sets = enumerate_or_sample_subsets(n - 2, k - 1, opts.warmup_family_limit, opts.seed, rep.family_complete);
  finish_pair_attack(rep, c, family, CoordSet::range(2, n), CoordSet::range(0, 2), Provenance::warmup1, 2 * (n - k));
  check_emitted(c, rep);
  return rep;
}

Warmup2Params derive_warmup2(std::size_t n, const Rational& R, const Rational& eps) {
  if (n < 3) throw InputError("warmup2 needs n >= 3");
  if (R <= Rational(0) || R >= Rational(1) || eps <= Rational(0) || eps >= Rational(1)) {
    throw InputError("R and eps must lie in (0, 1)");
  }
  const I64 ni = as_int(n);
  const Rational unit(3, ni);
  Warmup2Params wp;
  wp.R = round_to(R, unit, false);
  wp.eps = round_to(eps + (R - wp.R), unit, true);
  const Rational nr(ni);
  const std::size_t Rn = exact_count(wp.R * nr, "R n");
  const std::size_t epsn = exact_count(wp.eps * nr, "eps n");
  if (Rn <= epsn) throw ParameterError("rounded eps is not below rounded R");
  wp.i0 = 4 * epsn;
  wp.alpha_n = Rn - epsn;
  wp.beta_n = Rn + epsn;
  if (wp.i0 + wp.beta_n > n) throw ParameterError("4 eps n + (R + eps) n exceeds n");
  wp.total = 2 * (n - Rn - epsn);
  return wp;
}

AttackReport run_warmup2(const Code& c, const Rational& R, const Rational& eps, const AttackOptions& opts) {
  AttackReport rep;
  rep.attack = "warmup2";
  const std::size_t n = c.n();
  const Warmup2Params wp = derive_warmup2(n, R, eps);
  if (auto d = min_distance(c); d && !(Rational(as_int(*d)) > (Rational(1) - R - eps) * Rational(as_int(n)))) {
    throw InputError("warmup2 needs minimum distance above (1 - R - eps) n; code has " + std::to_string(*d));
  }
  rep.figures = {{"i0", as_int(wp.i0)},
                 {"alpha_n", as_int(wp.alpha_n)},
                 {"beta_n", as_int(wp.beta_n)},
                 {"per_partner", as_int(n - wp.i0 - wp.alpha_n)},
                 {"total_bound", as_int(wp.total)}};

  PairwiseFamilyOptions po;
  po.max_sets = opts.family_cap;
  po.samples = opts.warmup_family_limit;
  const SetFamily family = pairwise_family_warmup2(n, wp.i0, wp.alpha_n, wp.beta_n, opts.seed, po);
  finish_pair_attack(rep, c, family, CoordSet::range(wp.i0, n), CoordSet::range(0, wp.i0), Provenance::warmup2,
                     wp.total);
  check_emitted(c, rep);
  return rep;
}

SingletonWitness singleton_witness(const Code& c, std::size_t L) {
  if (L < 1) throw InputError("list size L must be at least 1");
  if (c.size() <= L) throw InputError("singleton witness needs more than L codewords");
  const std::size_t n = c.n();

  // Groups of codewords by prefix of length t, in order of first member.
  auto groups_at = [&](std::size_t t) {
    std::unordered_map<Word, std::size_t, WordHash> slot;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto s = c[i].symbols();
      Word key(std::vector<Symbol>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(t)));
      auto [it, fresh] = slot.try_emplace(std::move(key), groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(i);
    }
    return groups;
  };
  auto feasible = [&](std::size_t t) {
    for (const auto& g : groups_at(t)) {
      if (g.size() > L) return true;
    }
    return false;
  };

  std::size_t lo = 0;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::size_t t = lo;
  std::vector<std::size_t> members;
  for (const auto& g : groups_at(t)) {
    if (g.size() > L) {
      members.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(L + 1));
      break;
    }
  }

  const std::size_t rest = n - t;
  const std::size_t base = rest / (L + 1);
  const std::size_t extra = rest % (L + 1);
  Word y = c[members[0]];
  std::size_t pos = t;
  for (std::size_t j = 0; j <= L; ++j) {
    const std::size_t len = base + (j < extra ? 1 : 0);
    for (std::size_t i = pos; i < pos + len; ++i) y[i] = c[members[j]][i];
    pos += len;
  }

  SingletonWitness out;
  out.prefix = t;
  Certificate& cert = out.certificate;
  cert.mode = DecodingMode::ordinary;
  cert.provenance = Provenance::singleton_witness;
  cert.codewords = members;
  for (auto idx : members) cert.distances.push_back(hamming_distance(y, c[idx]));
  cert.center = std::move(y);
  cert.threshold = rest - base;
  return out;
}

}  // namespace gsb
