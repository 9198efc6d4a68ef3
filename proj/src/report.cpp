#include "gpg/report.hpp"

namespace gpg {

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["instance"] = instance;
  j["game"] = game;
  j["winner"] = winner;
  j["nodes"] = nodes;
  j["elapsed_ms"] = elapsed_ms;
  j["pv"] = pv;
  if (theorem_tag) j["theorem_tag"] = *theorem_tag;
  if (agreement) j["agreement"] = *agreement;
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.instance = j.at("instance").get<std::string>();
  r.game = j.at("game").get<std::string>();
  r.winner = j.at("winner").get<std::string>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  r.pv = j.at("pv").get<std::vector<int>>();
  if (j.contains("theorem_tag"))
    r.theorem_tag = j.at("theorem_tag").get<std::string>();
  if (j.contains("agreement")) r.agreement = j.at("agreement").get<bool>();
  return r;
}

}  // namespace gpg
