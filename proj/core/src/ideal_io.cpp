#include "cca/ideal_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "cca/errors.hpp"
#include "cca/parser.hpp"

namespace cca {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

// `<v1>><v2>>...`, possibly split across whitespace.
std::vector<std::string> parse_priority_chain(
    const std::vector<std::string>& tokens, std::size_t start) {
  std::string joined;
  for (std::size_t i = start; i < tokens.size(); ++i) joined += tokens[i];
  std::vector<std::string> names;
  std::string current;
  for (char c : joined) {
    if (c == '>') {
      if (current.empty()) throw Error("malformed order: empty variable name");
      names.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (current.empty()) throw Error("malformed order: empty variable name");
  names.push_back(current);
  return names;
}

std::vector<std::int64_t> parse_weight_list(const std::string& text) {
  std::vector<std::int64_t> weights;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) throw Error("malformed order: empty weight");
    std::int64_t value = 0;
    auto result =
        std::from_chars(current.data(), current.data() + current.size(), value);
    if (result.ec != std::errc() ||
        result.ptr != current.data() + current.size()) {
      throw Error("malformed order: bad weight " + current);
    }
    weights.push_back(value);
    current.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return weights;
}

MonomialOrder parse_order_line(const std::vector<std::string>& tokens,
                               const RingPtr& ring) {
  if (tokens.size() < 2) throw Error("malformed order line");
  if (tokens[1] == "lex") {
    if (tokens.size() < 3) throw Error("malformed order line");
    return MonomialOrder::lex(ring, parse_priority_chain(tokens, 2));
  }
  if (tokens[1] == "weight") {
    // `order weight w1,w2,... lex <chain>`; the weight list may itself be
    // split across whitespace.
    std::size_t lex_pos = 2;
    std::string weight_text;
    while (lex_pos < tokens.size() && tokens[lex_pos] != "lex") {
      weight_text += tokens[lex_pos];
      ++lex_pos;
    }
    if (lex_pos + 1 >= tokens.size()) {
      throw Error("weight order needs a lex tie-break");
    }
    return MonomialOrder::weight(ring, parse_weight_list(weight_text),
                                 parse_priority_chain(tokens, lex_pos + 1));
  }
  throw Error("unknown order kind: " + tokens[1]);
}

}  // namespace

IdealFile read_ideal_file(std::istream& in) {
  RingPtr ring;
  std::optional<MonomialOrder> order;
  std::vector<Polynomial> generators;

  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string line = strip_comment(raw);
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "ring") {
        if (ring) throw Error("duplicate ring line");
        if (tokens.size() < 4 || tokens[tokens.size() - 2] != "over") {
          throw Error("malformed ring line");
        }
        std::vector<std::string> names(tokens.begin() + 1, tokens.end() - 2);
        ring = PolynomialRing::make(std::move(names),
                                    Field::parse(tokens.back()));
      } else if (tokens[0] == "order") {
        if (!ring) throw Error("order line before ring line");
        if (order) throw Error("duplicate order line");
        order = parse_order_line(tokens, ring);
      } else if (tokens[0] == "gen") {
        if (!ring || !order) {
          throw Error("gen line before ring and order lines");
        }
        auto pos = line.find("gen");
        Polynomial g = parse_polynomial(line.substr(pos + 3), ring);
        if (g.is_zero()) throw Error("zero generator");
        generators.push_back(std::move(g));
      } else {
        throw Error("unknown directive: " + tokens[0]);
      }
    } catch (const Error& e) {
      throw Error("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  if (!ring) throw Error("missing ring line");
  if (!order) throw Error("missing order line");
  return IdealFile{std::move(ring), std::move(*order), std::move(generators)};
}

IdealFile read_ideal_file_from_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return read_ideal_file(in);
}

}  // namespace cca
