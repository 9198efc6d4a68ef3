#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gpg {

/// One solve or verification record. winner is "A" (the engine's First,
/// the player moving at the empty position) or "B"; empty when the record
/// describes a pure property check. agreement appears only in verify
/// records.
struct Report {
  std::string instance;
  std::string game;
  std::string winner;
  std::uint64_t nodes = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<int> pv;
  std::optional<std::string> theorem_tag;
  std::optional<bool> agreement;

  bool operator==(const Report&) const = default;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
};

}  // namespace gpg
