#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cca::workbench {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, info };

std::string verdict_name(Verdict verdict);
Verdict verdict_from_name(const std::string& name);

// Structured command result. A fail verdict always carries at least one
// witness string; the JSON form round-trips through from_json.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Verdict verdict = Verdict::info;
  Json payload = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> witnesses;

  void fail_with(std::string witness);
  int exit_code() const { return verdict == Verdict::fail ? 1 : 0; }

  Json to_json() const;
  static Report from_json(const Json& encoded);
  std::string to_text() const;

  bool operator==(const Report& other) const;
};

}  // namespace cca::workbench
