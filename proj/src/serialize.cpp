#include "gsb/serialize.hpp"

#include "gsb/errors.hpp"

namespace gsb {
namespace {

using nlohmann::json;

json word_json(const Word& w) { return json(std::vector<Symbol>(w.begin(), w.end())); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const Violation& v) {
  return json{{"mode", to_string(v.mode)},
              {"center", word_json(v.center)},
              {"indices", v.indices},
              {"distances", v.distances},
              {"threshold", v.threshold}};
}

Violation violation_from_json(const json& j) {
  Violation v;
  v.mode = parse_mode(field<std::string>(j, "mode"));
  v.center = Word(field<std::vector<Symbol>>(j, "center"));
  v.indices = field<std::vector<std::size_t>>(j, "indices");
  v.distances = field<std::vector<std::size_t>>(j, "distances");
  v.threshold = field<std::size_t>(j, "threshold");
  return v;
}

json to_json(const Certificate& cert) {
  return json{{"mode", to_string(cert.mode)},
              {"provenance", to_string(cert.provenance)},
              {"center", word_json(cert.center)},
              {"codewords", cert.codewords},
              {"distances", cert.distances},
              {"threshold", cert.threshold}};
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.mode = parse_mode(field<std::string>(j, "mode"));
  cert.provenance = parse_provenance(field<std::string>(j, "provenance"));
  cert.center = Word(field<std::vector<Symbol>>(j, "center"));
  cert.codewords = field<std::vector<std::size_t>>(j, "codewords");
  cert.distances = field<std::vector<std::size_t>>(j, "distances");
  cert.threshold = field<std::size_t>(j, "threshold");
  return cert;
}

json to_json(const AttackParams& ap) {
  json intervals = json::array();
  for (const auto& I : ap.intervals) {
    intervals.push_back(I.empty() ? json::array() : json::array({I[0], I.bound()}));
  }
  return json{{"n", ap.n},
              {"L", ap.L},
              {"R", ap.R.str()},
              {"eps", ap.eps.str()},
              {"p", ap.p.str()},
              {"pn", ap.pn},
              {"k", ap.k},
              {"a_F", ap.a_F},
              {"a_union", ap.a_union},
              {"d0", ap.d0},
              {"d1", ap.d1},
              {"intervals", intervals},
              {"min_distance", ap.min_distance},
              {"union_margin", ap.union_margin},
              {"alpha", ap.alpha},
              {"beta", ap.beta},
              {"alpha_floor", ap.alpha_floor},
              {"beta_ceiling", ap.beta_ceiling},
              {"chain_holds", ap.chain_holds}};
}

json to_json(const DistanceWitness& w) {
  return json{{"first", w.first},
              {"second", w.second},
              {"sets", w.set_indices},
              {"union_size", w.union_size},
              {"distance", w.distance}};
}

json to_json(const AttackReport& rep) {
  json j{{"attack", rep.attack},
         {"outcome", to_string(rep.outcome)},
         {"failed_stage", to_string(rep.failed_stage)},
         {"family_size", rep.family_size},
         {"family_complete", rep.family_complete},
         {"union_arity", rep.union_arity},
         {"need", rep.need},
         {"popular", rep.popular},
         {"best_fc", rep.best_fc},
         {"class_sizes", rep.class_sizes},
         {"max_class", rep.max_class},
         {"subcode_applied", rep.subcode_applied},
         {"subcode_size", rep.subcode_size}};
  j["implied_q_floor"] = rep.implied_q_floor ? json(*rep.implied_q_floor) : json(nullptr);
  json figures = json::object();
  for (const auto& [name, value] : rep.figures) figures[name] = value;
  j["figures"] = figures;
  if (rep.params) j["params"] = to_json(*rep.params);
  if (rep.certificate) j["certificate"] = to_json(*rep.certificate);
  if (rep.witness) j["distance_witness"] = to_json(*rep.witness);
  return j;
}

json to_json(const SetFamily& f) {
  json sets = json::array();
  for (const auto& s : f.sets) sets.push_back(std::vector<std::size_t>(s.begin(), s.end()));
  return json{{"m", f.ground_size},
              {"a_F", f.member_size},
              {"a_union", f.union_floor},
              {"W", f.union_arity},
              {"verified", f.verified},
              {"sets", sets}};
}

}  // namespace gsb
