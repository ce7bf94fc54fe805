#include "report.hpp"

#include <sstream>
#include <stdexcept>

namespace cca::workbench {

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::info:
      return "info";
  }
  throw std::logic_error("unreachable verdict");
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "pass") return Verdict::pass;
  if (name == "fail") return Verdict::fail;
  if (name == "info") return Verdict::info;
  throw std::runtime_error("unknown verdict: " + name);
}

void Report::fail_with(std::string witness) {
  verdict = Verdict::fail;
  witnesses.push_back(std::move(witness));
}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command;
  out["inputs"] = inputs;
  out["verdict"] = verdict_name(verdict);
  if (seed) out["seed"] = *seed;
  out["payload"] = payload;
  out["witnesses"] = witnesses;
  return out;
}

Report Report::from_json(const Json& encoded) {
  Report report;
  report.command = encoded.at("command").get<std::string>();
  report.inputs = encoded.at("inputs");
  report.verdict = verdict_from_name(encoded.at("verdict").get<std::string>());
  if (encoded.contains("seed")) {
    report.seed = encoded.at("seed").get<std::uint64_t>();
  }
  report.payload = encoded.at("payload");
  report.witnesses =
      encoded.at("witnesses").get<std::vector<std::string>>();
  return report;
}

namespace {

void print_block(std::ostringstream& out, const std::string& label,
                 const Json& value) {
  if (value.is_object() && value.empty()) return;
  out << label << ":\n";
  std::istringstream lines(value.dump(2));
  std::string line;
  while (std::getline(lines, line)) {
    out << "  " << line << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "verdict: " << verdict_name(verdict) << "\n";
  if (seed) out << "seed: " << *seed << "\n";
  print_block(out, "inputs", inputs);
  print_block(out, "payload", payload);
  if (!witnesses.empty()) {
    out << "witnesses:\n";
    for (const std::string& witness : witnesses) {
      out << "  - " << witness << "\n";
    }
  }
  return out.str();
}

bool Report::operator==(const Report& other) const {
  return to_json() == other.to_json();
}

}  // namespace cca::workbench
