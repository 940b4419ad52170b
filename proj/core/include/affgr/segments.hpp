#pragma once

#include "affgr/weyl.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace affgr {

struct ColoredPart {
  int value = 0;
  int color = 0;
  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

// Weakly decreasing colored parts, largest first.
struct ColoredPartition {
  std::vector<ColoredPart> parts;

  int size() const;
  bool empty() const { return parts.empty(); }
  // "7,5^1,5^1,3,1"; color 0 is not written.
  std::string to_string() const;
  friend auto operator<=>(const ColoredPartition&, const ColoredPartition&) = default;
};

ColoredPartition parse_partition(std::string_view text);
ColoredPartition uncolored(std::initializer_list<int> values);
// Size first, then lexicographic on parts.
bool canonical_less(const ColoredPartition& a, const ColoredPartition& b);

struct Segment {
  int length = 0;
  int color = 0;
  // Type II only: 0 for segments ending in s_0, 1 for those ending in s_1.
  std::optional<int> parity;
  std::vector<int> word;
  GroupElement element;

  ColoredPart part() const { return {length, color}; }
};

// Literal tables for B, C, D, G2, F4. Type II tables list parity 1 and
// parity 0 segments.
std::vector<Segment> segments_table(AffineType t);
// Generated from finite parabolic quotients for every type.
std::vector<Segment> segments_compute(AffineType t);

// Segment words for type A: C_{i,j} = s_i...s_1 s_{n-j+2}...s_n s_0.
std::vector<int> type_a_segment_word(int n, int i, int j);

// The segment set, pair table and factorization for one type. Built once,
// then immutable and shared.
class SegmentSystem {
 public:
  static const SegmentSystem& get(AffineType t);
  explicit SegmentSystem(AffineType t);

  AffineType type() const { return type_; }
  bool type_two() const { return type_two_; }

  // Parts are indexed 0..part_count()-1 in (length, color) order.
  int part_count() const { return static_cast<int>(parts_.size()); }
  ColoredPart part(int id) const { return parts_.at(id); }
  std::optional<int> part_id(ColoredPart p) const;
  const Segment& segment(int id, int parity = 0) const;
  std::optional<int> find(const GroupElement& g, int parity = 0) const;
  int max_length() const { return parts_.empty() ? 0 : parts_.back().value; }

  // (lower, upper) may be consecutive parts lambda_{i+1}, lambda_i.
  bool allowed(int lower, int upper) const { return allowed_[lower * part_count() + upper]; }
  bool repeatable(int id) const { return allowed(id, id); }
  // Parts of one smaller length covered by this part in left weak order.
  const std::vector<int>& lower_covers(int id) const { return lower_covers_.at(id); }

  // r(w) left to right, as (part id, parity); parity is 0 for Type I.
  std::vector<std::pair<int, int>> factor_ids(const GroupElement& w) const;

 private:
  AffineType type_;
  bool type_two_;
  std::vector<ColoredPart> parts_;
  std::vector<Segment> by_parity_[2];
  std::unordered_map<GroupElement, int, GroupElementHash> lookup_[2];
  std::vector<char> allowed_;
  std::vector<std::vector<int>> lower_covers_;
};

// Product a*b is reduced and minimal in its coset: W~/W when b has parity 0
// or is Type I, W~/W_{S'} when b has parity 1.
bool allowed_pair(const Segment& a, const Segment& b);

std::vector<Segment> factor(const GroupElement& w);
ColoredPartition pi(const GroupElement& w);
GroupElement pi_inv(AffineType t, const ColoredPartition& lambda);
bool is_affine_partition(AffineType t, const ColoredPartition& lambda);
bool gyl_covers(AffineType t, const ColoredPartition& lambda, const ColoredPartition& mu);
std::vector<ColoredPartition> gyl_lower_covers(AffineType t, const ColoredPartition& lambda);
// Down-closure of lambda under gyl covers, lambda included.
std::vector<ColoredPartition> gyl_lower_interval(AffineType t, const ColoredPartition& lambda);
std::vector<int> p_removable_corners(AffineType t, const ColoredPartition& lambda);

}  // namespace affgr
