#pragma once

#include "affgr/segments.hpp"
#include "affgr/weyl.hpp"

#include <vector>

namespace affgr {

// Partitions for type A_n are plain row lengths; the residue modulus n+1
// travels alongside. Cells are (row, col), 1-indexed.
struct CorePartition {
  int n = 0;
  std::vector<int> rows;
  friend bool operator==(const CorePartition&, const CorePartition&) = default;
};

struct BoundedPartition {
  int n = 0;
  std::vector<int> rows;
  friend bool operator==(const BoundedPartition&, const BoundedPartition&) = default;
};

// (col - row) mod (n+1)
int content(int n, int row, int col);
std::vector<int> conjugate(const std::vector<int>& rows);
int hook_length(const std::vector<int>& rows, int row, int col);
bool is_core(const CorePartition& lambda);
bool is_bounded(const BoundedPartition& mu);
bool contains(const std::vector<int>& outer, const std::vector<int>& inner);

// Add every addable cell of content i, or else remove every removable one.
CorePartition r_op(const CorePartition& lambda, int i);
CorePartition c_map(const GroupElement& w);
BoundedPartition b_map(const CorePartition& lambda);
GroupElement a_map(const BoundedPartition& mu);
// Inverse of a_map on minimal representatives.
BoundedPartition a_inverse(const GroupElement& w);

struct TypeASegment {
  int n = 0;
  int i = 0;  // arm, 0..n
  int j = 1;  // leg, 1..n
  int length() const { return i + j; }
  std::vector<int> word() const { return type_a_segment_word(n, i, j); }
  GroupElement element() const;
  friend bool operator==(const TypeASegment&, const TypeASegment&) = default;
};

// Factors of r(w) (left to right) for w with core lambda, by stripping the
// lowest central hook repeatedly.
std::vector<TypeASegment> central_hook_factor(const CorePartition& lambda);

// Whether C_{i,j} C_{k,l} is reduced and a minimal representative.
bool allowed_pair_A(int n, int i, int j, int k, int l);
// Lascoux: Bruhat order is containment of cores.
bool core_leq(const GroupElement& v, const GroupElement& w);

enum class SpiralDirection { Ccw, Cw };
// The spiral of length k*n: C_{0,j}(C_{1,n})^m (ccw) or C_{i,1}(C_{n,1})^m
// (cw), with the leading factor forced by the length.
GroupElement spiral(int n, int k, SpiralDirection dir);
// Explicit form; throws CongruenceError when the leading index does not
// satisfy the congruence of its family.
GroupElement spiral_from_factors(int n, int lead, int repeats, SpiralDirection dir);

// s_i -> s_{n+1-i}, s_0 fixed.
GroupElement diagram_involution(const GroupElement& w);

}  // namespace affgr
