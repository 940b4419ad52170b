#pragma once

#include "affgr/poset.hpp"
#include "affgr/segments.hpp"
#include "affgr/series.hpp"
#include "affgr/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affgr {

// Elements v <= w of the quotient, closed downward under Bruhat covers
// (the quotient order is graded, so covers reach everything).
std::vector<GroupElement> lower_interval(const GroupElement& w, std::size_t cap = 2'000'000);
// Same set by filtering a full enumeration with the lifting recursion.
std::vector<GroupElement> lower_interval_by_filter(const GroupElement& w, const QuotientLayers& layers,
                                                   BruhatOracle& oracle);
// Quotient elements covered by w: single-letter deletions of the stored
// reduced word that stay reduced and minimal.
std::vector<GroupElement> bruhat_lower_covers(const GroupElement& w);

IntPolynomial length_histogram(const std::vector<GroupElement>& elements);
IntPolynomial poincare(const GroupElement& w);
// Smallest i >= 1 with a_i != a_{deg-i}; 0 when palindromic.
int asymmetry_depth(const IntPolynomial& p);
bool is_palindromic(const IntPolynomial& p);
bool is_palindromic(const GroupElement& w);
bool is_cpo(const GroupElement& w);
bool is_chain(const GroupElement& w);

// Smallest length with two quotient elements; nullopt for A1.
std::optional<int> branching_number(AffineType t);
bool is_thin(AffineType t, const ColoredPartition& lambda);
bool is_extra_thin(AffineType t, const ColoredPartition& lambda);

RankedPoset bruhat_interval_poset(const GroupElement& w);
RankedPoset gyl_interval_poset(AffineType t, const ColoredPartition& lambda);
bool gyl_rank_symmetric(AffineType t, const ColoredPartition& lambda);
bool yb_nice(const GroupElement& w);

struct ElementReport {
  ColoredPartition partition;
  std::vector<int> word;
  int length = 0;
  IntPolynomial poincare;
  bool palindromic = false;
  int asymmetry_depth = 0;
  bool cpo = false;
  bool chain = false;
  bool yb_nice = false;
};

// Poincare polynomials for every quotient element up to max_len, by
// filtering the enumeration. Work is spread over affgr::worker_count()
// threads; output order follows the enumeration.
// Throws ResourceLimit when the quotient has more than element_cap elements
// up to max_len.
std::vector<ElementReport> classify_all(AffineType t, int max_len, bool with_yb = false,
                                       std::size_t element_cap = 2'000'000);
ElementReport classify(const GroupElement& w, bool with_yb = true);

struct MwReport {
  int value = 0;
  int max_len = 0;
  std::size_t elements = 0;
  std::size_t non_palindromic = 0;
  std::vector<ColoredPartition> witnesses;
};
MwReport empirical_mW(AffineType t, int max_len);
MwReport empirical_mW(AffineType t, int max_len, const std::vector<ElementReport>& reports);

// Stated m_W per type. For D_n two different values are stated (n-2 and
// n-1); `alternate` carries the second.
struct StatedMw {
  int value = 0;
  std::optional<int> alternate;
};
StatedMw stated_mW(AffineType t);

// Exceptional palindromic lists, keyed by type name ("G2", "F4", "E6"...).
using PalindromicFixtures = std::map<std::string, std::vector<ColoredPartition>>;
const PalindromicFixtures& shipped_palindromic_fixtures();
PalindromicFixtures load_palindromic_fixtures(const std::string& path);
std::string palindromic_fixtures_json(const PalindromicFixtures& f);
// Search over extra thin partitions with at most max_parts parts.
std::vector<ColoredPartition> search_exceptional_palindromics(AffineType t, int max_parts = 3);
std::vector<ColoredPartition> extra_thin_partitions(AffineType t, int max_parts);

std::vector<ColoredPartition> predicted_palindromics(AffineType t, int max_len,
                                                     const PalindromicFixtures& fixtures = shipped_palindromic_fixtures());

}  // namespace affgr
