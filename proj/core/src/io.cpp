#include "affgr/io.hpp"

#include "affgr/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace affgr {

json to_json(const GroupElement& w) {
  return json{{"type", w.type().name()}, {"word", std::vector<int>(w.word().begin(), w.word().end())},
              {"length", w.length()}};
}

GroupElement element_from_json(const json& j) {
  try {
    const AffineType t = AffineType::parse(j.at("type").get<std::string>());
    const auto word = j.at("word").get<std::vector<int>>();
    const int length = j.at("length").get<int>();
    auto g = GroupElement::from_reduced_word(t, word);
    if (!g) throw InvalidInput("element word is not reduced");
    if (g->length() != length) throw InvalidInput("element length does not match its word");
    return *g;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed element JSON: ") + e.what());
  }
}

json to_json(const ColoredPartition& p) {
  json a = json::array();
  for (const auto& part : p.parts) a.push_back({{"value", part.value}, {"color", part.color}});
  return a;
}

ColoredPartition partition_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("partition JSON must be an array");
  ColoredPartition p;
  try {
    for (const auto& e : j) p.parts.push_back({e.at("value").get<int>(), e.value("color", 0)});
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed partition JSON: ") + e.what());
  }
  for (std::size_t i = 1; i < p.parts.size(); ++i)
    if (p.parts[i].value > p.parts[i - 1].value) throw InvalidInput("partition parts must be weakly decreasing");
  return p;
}

json to_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) {
    if (c <= BigInt(std::numeric_limits<long long>::max()))
      a.push_back(c.convert_to<long long>());
    else
      a.push_back(c.str());
  }
  return a;
}

json to_json(const ElementReport& r) {
  return json{{"partition", to_json(r.partition)}, {"length", r.length},       {"poincare", to_json(r.poincare)},
              {"palindromic", r.palindromic},       {"cpo", r.cpo},             {"chain", r.chain},
              {"yb_nice", r.yb_nice}};
}

json to_json(const Segment& s) {
  json j{{"length", s.length}, {"color", s.color}, {"word", s.word}};
  if (s.parity) j["parity"] = *s.parity;
  return j;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') s += ch;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse integer list '" + std::string(text) + "'");
    }
  }
  return out;
}

PalindromicFixtures load_palindromic_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture file " + path);
  PalindromicFixtures out;
  try {
    const json j = json::parse(in);
    for (const auto& [name, list] : j.items()) {
      AffineType::parse(name);
      auto& dst = out[name];
      for (const auto& text : list) dst.push_back(parse_partition(text.get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed fixture file: ") + e.what());
  }
  return out;
}

std::string palindromic_fixtures_json(const PalindromicFixtures& f) {
  json j = json::object();
  for (const auto& [name, list] : f) {
    json a = json::array();
    for (const auto& p : list) a.push_back(p.to_string());
    j[name] = a;
  }
  return j.dump(2);
}

}  // namespace affgr
