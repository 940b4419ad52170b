#pragma once

#include "affgr/cartan.hpp"
#include "affgr/segments.hpp"
#include "affgr/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affgr {

// Number of affine partitions of each size k <= N.
TruncatedSeries partition_series(AffineType t, int N);

// sum over strictly decreasing chains of parts (consecutive parts allowed)
// of t^{|lambda|} / D(lambda), D picking up 1 - t^j for repeatable parts.
TruncatedSeries chain_sum_genfun(AffineType t, int N);

RationalForm bott_form(AffineType t);
// Closed product formulas for the partition generating function.
RationalForm closed_form(AffineType t);  // B, C, D, G2

struct IdentityResult {
  std::string identity;
  AffineType type;
  bool exact = false;  // decided as a polynomial identity
  bool holds = false;
  int checked_to = 0;  // truncation used for the series comparison
  std::optional<int> first_mismatch_degree{};
  std::string detail{};
};

// Closed form = Bott exactly, and closed form = partition series through N.
IdentityResult closed_form_B(int n, int N = 100);
IdentityResult closed_form_C(int n, int N = 100);
IdentityResult closed_form_D(int n, int N = 100);
IdentityResult closed_form_G2(int N = 100);
IdentityResult f4_identity();
// partition series = Bott series through N.
IdentityResult truncated_identity(AffineType t, int N);

struct F4AppendixReport {
  std::vector<ColoredPartition> nr;
  std::vector<ColoredPartition> nre;
  std::vector<long long> nr_vector;   // count by size
  std::vector<long long> nre_vector;
  int nr_max_size = 0;
  std::vector<ColoredPartition> nr_maximizers;
  IntPolynomial nr_polynomial() const;
  IntPolynomial nre_polynomial() const;
};
F4AppendixReport f4_appendix_data();

// Parts that may repeat in F4 and are excluded from NR.
std::vector<ColoredPart> f4_repeatable_parts();
// Published NR / NRE size vectors.
const std::vector<long long>& f4_expected_nr_vector();
const std::vector<long long>& f4_expected_nre_vector();

}  // namespace affgr
