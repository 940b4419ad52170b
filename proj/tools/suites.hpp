#pragma once

#include "affgr/cartan.hpp"
#include "affgr/smoothness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affgr::cli {

struct Check {
  std::string suite;
  std::string name;
  std::optional<AffineType> type;
  bool pass = false;
  std::string detail;
  std::optional<int> first_mismatch_degree;
};

struct SuiteOptions {
  std::optional<AffineType> type;  // restrict to one type; otherwise the default matrix
  std::optional<int> max_len;      // override the per-type length cap
  std::optional<int> trunc;        // series truncation
  std::size_t element_cap = 2'000'000;
  const PalindromicFixtures* fixtures = nullptr;
};

// Length caps that reach the m_W witnesses while staying quick.
int default_smoothness_cap(AffineType t);

std::vector<Check> suite_identities(const SuiteOptions& o);
std::vector<Check> suite_bijection(const SuiteOptions& o);
std::vector<Check> suite_palindromy(const SuiteOptions& o);
std::vector<Check> suite_f4_appendix(const SuiteOptions& o);
std::vector<Check> suite_mw(const SuiteOptions& o);

// nullopt for an unknown suite name.
std::optional<std::vector<Check>> run_suite(const std::string& name, const SuiteOptions& o);
const std::vector<std::string>& suite_names();

}  // namespace affgr::cli
