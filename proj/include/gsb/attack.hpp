#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/core.hpp"
#include "gsb/rational.hpp"
#include "gsb/set_family.hpp"
#include "gsb/verifier.hpp"

namespace gsb {

/// Integer parameters of the general attack for one (n, L, R, eps).
struct AttackParams {
  std::size_t n = 0;
  std::size_t L = 0;
  Rational R;    ///< rounded down to a multiple of (L+1)/n
  Rational eps;  ///< rounded up to a multiple of (L+1)/n, absorbing the rate rounding
  Rational p;    ///< L/(L+1) (1 - R - eps)
  std::size_t pn = 0;
  std::size_t k = 0;  ///< R n
  std::size_t a_F = 0;
  std::size_t a_union = 0;
  std::size_t d0 = 0;
  std::size_t d1 = 0;
  std::vector<CoordSet> intervals;  ///< I_0, ..., I_L laid out from coordinate 0
  CoordSet star;                    ///< union of the intervals, [0, pn)
  CoordSet ground;                  ///< complement of `star`, where the family lives

  std::size_t min_distance = 0;  ///< ceil((p + p^L/(2L)) n), the distance the attack assumes
  bool union_margin = false;     ///< a_union > (1 - p - p^L/(2L)) n

  double alpha = 0.0;  ///< a_F / (n - pn)
  double beta = 0.0;   ///< a_union / (n - pn)
  double beta_ceiling = 0.0;
  double alpha_floor = 0.0;
  bool chain_holds = false;  ///< alpha_floor <= alpha < beta <= beta_ceiling, within (0, 1)
};

/// Throws ParameterError when the rounded parameters are not integral or the
/// interval layout constraints cannot be met.
AttackParams derive_params(std::size_t n, std::size_t L, const Rational& R, const Rational& eps);

enum class Provenance { warmup1, warmup2, general, singleton_witness };
std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

struct Certificate {
  DecodingMode mode = DecodingMode::ordinary;
  Provenance provenance = Provenance::general;
  Word center;
  std::vector<std::size_t> codewords;
  std::vector<std::size_t> distances;
  std::size_t threshold = 0;  ///< per-word bound (ordinary) or bound on the total (average_radius)

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Recomputes everything from the code and the center; trusts no stored field
/// except the threshold it is checked against.
CertificateCheck verify_certificate(const Code& c, const Certificate& cert);

/// A family member A with the partner f^A(c) agreeing with c on A.
struct PartnerEntry {
  std::size_t set_index = 0;
  std::size_t partner = 0;

  friend bool operator==(const PartnerEntry&, const PartnerEntry&) = default;
};

struct PopularCodeword {
  std::size_t codeword = 0;
  std::vector<PartnerEntry> partners;  ///< in family order
};

/// Codeword with the most family members on which some other codeword agrees
/// with it (ties to the smallest index); partner = smallest other index.
/// `ground[e]` is the code coordinate of family element e.
PopularCodeword find_popular_codeword(const Code& c, const SetFamily& family, const CoordSet& ground);

struct PigeonholeResult {
  std::vector<std::vector<PartnerEntry>> classes;  ///< grouped by restriction to I_0, first-appearance order
  std::size_t max_class = 0;
  std::optional<std::size_t> chosen;  ///< first class with at least `need` entries
};

PigeonholeResult pigeonhole_I0(std::span<const PartnerEntry> partners, const Code& c, const CoordSet& I0,
                               std::size_t need);

/// Two codewords agreeing on the union of several family members: a pair
/// closer than the attack's distance assumption allows.
struct DistanceWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::size_t> set_indices;
  std::size_t union_size = 0;
  std::size_t distance = 0;

  friend bool operator==(const DistanceWitness&, const DistanceWitness&) = default;
};

struct Selection {
  std::vector<PartnerEntry> chosen;  ///< L entries with distinct partners, or empty
  std::optional<DistanceWitness> witness;
};

/// Looks at the first W L entries of a collision class. A partner repeated W
/// times yields a distance witness; otherwise the first L distinct partners.
Selection select_distinct(std::span<const PartnerEntry> cls, const Code& c, std::size_t c0, const SetFamily& family,
                          std::size_t L);

/// Center agreeing with c_1 on I_0, with c_j on I_j and with c_0 elsewhere.
Certificate build_center_general(const Code& c, std::size_t c0, std::span<const PartnerEntry> chosen,
                                 const SetFamily& family, const AttackParams& params);

enum class AttackOutcome { certificate, stage_failed };
enum class AttackStage { none, popular_codeword, pigeonhole_I0, distinctness };
std::string_view to_string(AttackOutcome o);
std::string_view to_string(AttackStage s);

struct AttackReport {
  std::string attack;
  AttackOutcome outcome = AttackOutcome::stage_failed;
  AttackStage failed_stage = AttackStage::none;
  std::size_t family_size = 0;
  bool family_complete = true;  ///< false when the family was sampled rather than enumerated
  std::size_t union_arity = 0;
  std::size_t need = 0;
  std::size_t popular = 0;
  std::size_t best_fc = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t max_class = 0;
  std::optional<double> implied_q_floor;  ///< (|F| / (2 W L))^{1/d_0}
  bool subcode_applied = false;
  std::size_t subcode_size = 0;
  std::optional<AttackParams> params;
  std::optional<Certificate> certificate;
  std::optional<DistanceWitness> witness;
  std::vector<std::pair<std::string, std::int64_t>> figures;  ///< attack-specific integers
};

struct AttackOptions {
  std::uint64_t seed = 0;
  std::size_t family_cap = 64;
  std::uint64_t warmup_family_limit = 20'000;
  std::uint64_t max_tuples = kDefaultMaxTuples;
};

/// Runs the full pipeline. If the code is closer than params.min_distance,
/// attacks the greedy subcode instead; certificates always index the input.
AttackReport run_general_attack(const Code& c, std::size_t L, const Rational& R, const Rational& eps,
                                const AttackOptions& opts = {});

/// Average-radius attack for L = 2 with I_0 = {0, 1} and (k-1)-subsets.
AttackReport run_warmup1(const Code& c, const AttackOptions& opts = {});

struct Warmup2Params {
  Rational R;    ///< rounded down to a multiple of 3/n
  Rational eps;  ///< rounded up to a multiple of 3/n
  std::size_t i0 = 0;
  std::size_t alpha_n = 0;
  std::size_t beta_n = 0;
  std::size_t total = 0;  ///< 2 (1 - R - eps) n
};

Warmup2Params derive_warmup2(std::size_t n, const Rational& R, const Rational& eps);

/// Average-radius attack for L = 2 on codes with distance > (1 - R - eps) n.
/// Throws InputError when the distance assumption fails.
AttackReport run_warmup2(const Code& c, const Rational& R, const Rational& eps, const AttackOptions& opts = {});

struct SingletonWitness {
  Certificate certificate;
  std::size_t prefix = 0;
};

/// Longest prefix shared by L+1 codewords, remaining coordinates split into
/// L+1 blocks. Throws InputError if |C| <= L.
SingletonWitness singleton_witness(const Code& c, std::size_t L);

}  // namespace gsb
