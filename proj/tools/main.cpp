#include "suites.hpp"

#include "affgr/errors.hpp"
#include "affgr/identities.hpp"
#include "affgr/io.hpp"
#include "affgr/segments.hpp"
#include "affgr/smoothness.hpp"
#include "affgr/typea.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace affgr;
using affgr::cli::Check;

enum Exit { kPass = 0, kFail = 1, kCap = 2, kInvalid = 3 };

struct Config {
  std::string type;
  int rank = 0;
  int max_len = 12;
  std::optional<int> trunc;
  std::string format = "json";
  std::size_t cap_elements = 2'000'000;
  std::string fixtures;
  // factor / smoothness inputs
  std::string word, partition, bounded, core;
  bool no_yb = false;
  std::string suite;
  std::string out;
  int max_parts = 3;
  bool max_len_given = false;
};

AffineType resolve_type(const Config& c) {
  if (c.type.empty()) throw InvalidInput("--type is required");
  const bool has_digit = std::any_of(c.type.begin(), c.type.end(), [](char ch) { return std::isdigit(ch); });
  if (has_digit) {
    AffineType t = AffineType::parse(c.type);
    if (c.rank != 0 && c.rank != t.rank()) throw InvalidInput("--rank disagrees with --type " + c.type);
    return t;
  }
  if (c.rank == 0) throw InvalidInput("--type " + c.type + " needs --rank");
  return AffineType::parse(c.type + std::to_string(c.rank));
}

std::optional<AffineType> maybe_type(const Config& c) {
  if (c.type.empty()) return std::nullopt;
  return resolve_type(c);
}

std::string family_letter(AffineType t) { return t.name().substr(0, 1); }

// ---------------------------------------------------------------- output

class Emitter {
 public:
  explicit Emitter(std::string format) : format_(std::move(format)) {}

  void record(const json& j, const std::vector<std::string>& csv_columns, const std::string& text) {
    if (format_ == "json") {
      std::cout << j.dump() << '\n';
    } else if (format_ == "csv") {
      if (!header_done_) {
        for (std::size_t i = 0; i < csv_columns.size(); ++i) std::cout << (i ? "," : "") << csv_columns[i];
        std::cout << '\n';
        header_done_ = true;
      }
      for (std::size_t i = 0; i < csv_columns.size(); ++i) std::cout << (i ? "," : "") << csv_cell(j, csv_columns[i]);
      std::cout << '\n';
    } else {
      std::cout << text << '\n';
    }
  }

 private:
  static std::string csv_cell(const json& j, const std::string& key) {
    if (!j.contains(key)) return "";
    const json& v = j.at(key);
    std::string s;
    if (v.is_string()) {
      s = v.get<std::string>();
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
    } else {
      s = v.dump();
    }
    if (s.find_first_of(",\"") != std::string::npos) {
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    return s;
  }

  std::string format_;
  bool header_done_ = false;
};

json element_record(const GroupElement& w) {
  json j = to_json(w);
  const ColoredPartition lambda = pi(w);
  j["partition"] = to_json(lambda);
  json factors = json::array();
  for (const auto& s : factor(w)) factors.push_back(to_json(s));
  j["factors"] = factors;
  if (w.type().family() == Family::A) {
    j["core"] = c_map(w).rows;
    j["bounded"] = a_inverse(w).rows;
  }
  return j;
}

json flat_element_record(const GroupElement& w) {
  json j = element_record(w);
  j["word"] = w.word_string();
  j["partition"] = pi(w).to_string();
  return j;
}

void emit_element(Emitter& out, const GroupElement& w, const std::string& format) {
  const std::string text =
      std::to_string(w.length()) + "  " + w.word_string() + "  (" + pi(w).to_string() + ")";
  if (format == "csv") {
    out.record(flat_element_record(w), {"type", "length", "word", "partition"}, text);
  } else {
    out.record(element_record(w), {}, text);
  }
}

// ---------------------------------------------------------------- commands

int cmd_enumerate(const Config& c) {
  const AffineType t = resolve_type(c);
  const QuotientLayers layers = enumerate_quotient(t, c.max_len, c.cap_elements);
  std::size_t total = 0;
  for (const auto& l : layers) total += l.size();
  if (total > c.cap_elements)
    throw ResourceLimit(std::to_string(total) + " elements exceed --cap-elements " + std::to_string(c.cap_elements));
  Emitter out(c.format);
  for (const auto& layer : layers) {
    std::vector<std::pair<ColoredPartition, const GroupElement*>> sorted;
    for (const auto& w : layer) sorted.push_back({pi(w), &w});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    for (const auto& [lambda, w] : sorted) emit_element(out, *w, c.format);
  }
  return kPass;
}

GroupElement element_from_inputs(const Config& c, AffineType t) {
  const int given = !c.word.empty() + !c.partition.empty() + !c.bounded.empty() + !c.core.empty();
  if (given > 1) throw InvalidInput("give only one of --word, --partition, --bounded, --core");
  if (!c.word.empty()) {
    auto w = GroupElement::from_reduced_word(t, parse_word(c.word));
    if (!w) throw InvalidInput("word " + c.word + " is not reduced");
    if (!w->is_min_rep()) throw InvalidInput("not a minimal length coset representative: " + c.word);
    return *w;
  }
  if (!c.partition.empty()) return pi_inv(t, parse_partition(c.partition));
  if (t.family() != Family::A && (!c.bounded.empty() || !c.core.empty()))
    throw TypeMismatch("--bounded and --core need type A");
  if (!c.bounded.empty()) {
    BoundedPartition mu{t.rank(), parse_int_list(c.bounded)};
    if (!is_bounded(mu)) throw InvalidInput("(" + c.bounded + ") is not " + std::to_string(t.rank()) + "-bounded");
    return a_map(mu);
  }
  CorePartition lambda{t.rank(), parse_int_list(c.core)};
  if (!is_core(lambda)) throw InvalidInput("(" + c.core + ") is not an " + std::to_string(t.rank() + 1) + "-core");
  GroupElement w = a_map(b_map(lambda));
  if (!(c_map(w) == lambda)) throw InternalError("core round trip failed");
  return w;
}

bool has_element_input(const Config& c) {
  return !c.word.empty() || !c.partition.empty() || !c.bounded.empty() || !c.core.empty();
}

int cmd_factor(const Config& c) {
  Emitter out(c.format);
  if (has_element_input(c)) {
    emit_element(out, element_from_inputs(c, resolve_type(c)), c.format);
    return kPass;
  }
  // JSON lines on stdin, as written by `enumerate`
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("cannot parse input line: ") + e.what());
    }
    if (!j.contains("type") && !c.type.empty()) j["type"] = resolve_type(c).name();
    GroupElement w = [&] {
      if (j.contains("word")) return element_from_json(j);
      return pi_inv(AffineType::parse(j.at("type").get<std::string>()), partition_from_json(j.at("partition")));
    }();
    if (!w.is_min_rep()) throw InvalidInput("not a minimal length coset representative: " + w.word_string());
    if (j.contains("partition") && !(partition_from_json(j.at("partition")) == pi(w)))
      throw InvalidInput("record partition does not match its word");
    emit_element(out, w, c.format);
  }
  return kPass;
}

int cmd_smoothness(const Config& c) {
  const AffineType t = resolve_type(c);
  Emitter out(c.format);
  const std::vector<std::string> cols{"partition", "length", "poincare", "palindromic", "cpo", "chain", "yb_nice"};
  auto emit = [&](const ElementReport& r) {
    json j = to_json(r);
    std::string poly;
    for (std::size_t i = 0; i < r.poincare.coeffs().size(); ++i)
      poly += (i ? " " : "") + r.poincare.coeffs()[i].str();
    const std::string text = "(" + r.partition.to_string() + ")  " + r.poincare.to_string() +
                             (r.palindromic ? "  palindromic" : "") + (r.cpo ? "  cpo" : "") +
                             (r.chain ? "  chain" : "") + (r.yb_nice ? "  yb-nice" : "");
    if (c.format == "csv") {
      j["partition"] = r.partition.to_string();
      j["poincare"] = poly;
    }
    out.record(j, cols, text);
  };
  if (has_element_input(c)) {
    emit(classify(element_from_inputs(c, t), !c.no_yb));
    return kPass;
  }
  auto reports = classify_all(t, c.max_len, !c.no_yb, c.cap_elements);
  std::stable_sort(reports.begin(), reports.end(), [](const ElementReport& a, const ElementReport& b) {
    return canonical_less(a.partition, b.partition);
  });
  for (const auto& r : reports) emit(r);
  return kPass;
}

cli::SuiteOptions suite_options(const Config& c, const PalindromicFixtures* fixtures) {
  cli::SuiteOptions o;
  o.type = maybe_type(c);
  if (c.max_len_given) o.max_len = c.max_len;
  o.trunc = c.trunc;
  o.element_cap = c.cap_elements;
  o.fixtures = fixtures;
  return o;
}

int emit_checks(const std::vector<Check>& checks, const std::string& format, bool identity_schema) {
  Emitter out(format);
  bool all = true;
  for (const auto& ch : checks) {
    all = all && ch.pass;
    json j;
    if (identity_schema) {
      j = json{{"identity", ch.name}};
    } else {
      j = json{{"suite", ch.suite}, {"check", ch.name}};
    }
    if (ch.type) {
      j["type"] = family_letter(*ch.type);
      j["rank"] = ch.type->rank();
    }
    j["status"] = ch.pass ? "PASS" : "FAIL";
    if (ch.first_mismatch_degree) j["first_mismatch_degree"] = *ch.first_mismatch_degree;
    j["detail"] = ch.detail;
    const std::string text = std::string(ch.pass ? "PASS" : "FAIL") + "  " + ch.suite + "  " +
                             (ch.type ? ch.type->name() : std::string("-")) + "  " + ch.name + "  " + ch.detail;
    out.record(j, {"suite", "check", "identity", "type", "rank", "status", "first_mismatch_degree", "detail"}, text);
  }
  return all ? kPass : kFail;
}

PalindromicFixtures fixtures_or_shipped(const Config& c) {
  return c.fixtures.empty() ? shipped_palindromic_fixtures() : load_palindromic_fixtures(c.fixtures);
}

int cmd_verify(const Config& c) {
  const PalindromicFixtures fixtures = fixtures_or_shipped(c);
  auto checks = cli::run_suite(c.suite, suite_options(c, &fixtures));
  if (!checks) throw InvalidInput("unknown suite '" + c.suite + "'");
  return emit_checks(*checks, c.format, false);
}

int cmd_verify_identity(const Config& c) {
  return emit_checks(cli::suite_identities(suite_options(c, nullptr)), c.format, true);
}

int cmd_regen_fixtures(const Config& c) {
  std::vector<AffineType> types;
  if (auto t = maybe_type(c)) {
    types.push_back(*t);
  } else {
    for (const char* n : {"G2", "F4", "E6", "E7", "E8"}) types.push_back(AffineType::parse(n));
  }
  PalindromicFixtures f;
  for (AffineType t : types) {
    if (t.family() == Family::A || t.family() == Family::B || t.family() == Family::C || t.family() == Family::D)
      throw UnsupportedFamily("fixtures are only kept for exceptional types");
    f[t.name()] = search_exceptional_palindromics(t, c.max_parts);
  }
  const std::string text = palindromic_fixtures_json(f);
  if (c.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream file(c.out);
    if (!file) throw InvalidInput("cannot write " + c.out);
    file << text << '\n';
  }
  return kPass;
}

int cmd_segments(const Config& c) {
  const AffineType t = resolve_type(c);
  const SegmentSystem& sys = SegmentSystem::get(t);
  Emitter out(c.format);
  for (int parity = 0; parity < (sys.type_two() ? 2 : 1); ++parity)
    for (int id = 0; id < sys.part_count(); ++id) {
      const Segment& s = sys.segment(id, parity);
      json j = to_json(s);
      const std::string text = std::to_string(s.length) + (s.color ? "^" + std::to_string(s.color) : "") +
                               (s.parity ? " [" + std::to_string(*s.parity) + "]" : "") + "  " +
                               word_to_string(s.word);
      json flat = j;
      flat["word"] = word_to_string(s.word);
      out.record(c.format == "csv" ? flat : j, {"length", "color", "parity", "word"}, text);
    }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Weyl group quotients: segments, affine partitions, palindromy and identities", "affgr"};
  app.set_config("--config", "", "TOML/INI file with option values; unknown keys are rejected");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  Config c;
  app.add_option("--type", c.type, "Affine type, e.g. B3, or a family letter with --rank");
  app.add_option("--rank", c.rank, "Rank when --type is a bare family letter")->check(CLI::Range(1, 64));
  auto* max_len = app.add_option("--max-len", c.max_len, "Length cap")->check(CLI::Range(0, 10'000));
  app.add_option("--trunc", c.trunc, "Series truncation degree")->check(CLI::Range(0, 100'000));
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cap-elements", c.cap_elements, "Maximum number of quotient elements")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  app.add_option("--fixtures", c.fixtures, "JSON file with exceptional palindromic lists")->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enumerate", "List quotient elements up to --max-len");
  auto* fac = app.add_subcommand("factor", "Factor one element, or JSON lines from stdin");
  for (auto* sub : {fac}) {
    sub->add_option("--word", c.word, "Reduced word, e.g. s0s2s1 or 0,2,1");
    sub->add_option("--partition", c.partition, "Affine partition, e.g. 7,5^1,3");
    sub->add_option("--bounded", c.bounded, "Type A bounded partition");
    sub->add_option("--core", c.core, "Type A core partition");
  }
  auto* smooth = app.add_subcommand("smoothness", "Poincare polynomials and palindromy reports");
  smooth->add_option("--word", c.word, "Report one element given by a reduced word");
  smooth->add_option("--partition", c.partition, "Report one element given by its affine partition");
  smooth->add_flag("--no-yb", c.no_yb, "Skip the Young's lattice interval comparison");
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", c.suite, "identities | bijection | palindromy | f4-appendix | mw")
      ->required()
      ->check(CLI::IsMember(affgr::cli::suite_names()));
  auto* verify_identity = app.add_subcommand("verify-identity", "Generating function identities, PASS/FAIL per identity");
  auto* regen = app.add_subcommand("regen-fixtures", "Recompute exceptional palindromic lists");
  regen->add_option("--out", c.out, "Write to a file instead of stdout");
  regen->add_option("--max-parts", c.max_parts, "Parts searched")->check(CLI::Range(1, 7));
  auto* segments = app.add_subcommand("segments", "List the segments of a type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }
  c.max_len_given = max_len->count() > 0;

  try {
    if (enumerate->parsed()) return cmd_enumerate(c);
    if (fac->parsed()) return cmd_factor(c);
    if (smooth->parsed()) return cmd_smoothness(c);
    if (verify->parsed()) return cmd_verify(c);
    if (verify_identity->parsed()) return cmd_verify_identity(c);
    if (regen->parsed()) return cmd_regen_fixtures(c);
    if (segments->parsed()) return cmd_segments(c);
  } catch (const ResourceLimit& e) {
    std::cerr << "affgr: resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const InvalidInput& e) {
    std::cerr << "affgr: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "affgr: internal error: " << e.what() << '\n';
    return kFail;
  }
  return kInvalid;
}
