#pragma once

#include "affgr/series.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace affgr {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };
enum class TypeClass { TypeI, TypeII };

// An untwisted affine type. The rank n counts the finite simple
// generators; the group has generators s_0, ..., s_n.
class AffineType {
 public:
  AffineType(Family family, int rank);
  // "B3", "E8", "A5", "G2", ...
  static AffineType parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  int nodes() const noexcept { return rank_ + 1; }
  std::string name() const;

  friend auto operator<=>(const AffineType&, const AffineType&) = default;

 private:
  Family family_;
  int rank_;
};

class CartanData {
 public:
  CartanData(AffineType t, std::vector<int> pairing, std::vector<int> exponents);

  AffineType type() const noexcept { return type_; }
  int size() const noexcept { return size_; }
  // <alpha_i, alpha_j^vee>
  int operator()(int i, int j) const noexcept { return pairing_[i * size_ + j]; }
  // Order of s_i s_j; 0 stands for infinity (only in A1).
  int bond_order(int i, int j) const;
  bool adjacent(int i, int j) const noexcept { return i != j && (*this)(i, j) != 0; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  const std::vector<int>& pairing() const noexcept { return pairing_; }

 private:
  AffineType type_;
  int size_;
  std::vector<int> pairing_;
  std::vector<int> exponents_;
};

// Shared, immutable, built on first use.
const CartanData& cartan(AffineType t);

TypeClass typeclass(AffineType t);

// The parabolic J used to cut segments: generators commuting with s_0 for
// Type I, and {2, ..., n} for Type II.
std::vector<int> commuting_with_s0(AffineType t);

// prod 1/(1 - t^e) over the exponents, through degree N.
TruncatedSeries bott_series(AffineType t, int N);

}  // namespace affgr
