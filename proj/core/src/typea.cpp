#include "affgr/typea.hpp"

#include "affgr/errors.hpp"

#include <algorithm>

namespace affgr {

namespace {

void require_type_a(const GroupElement& w) {
  if (w.type().family() != Family::A) throw TypeMismatch("type A operation on " + w.type().name());
}

void trim(std::vector<int>& rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
}

int row_at(const std::vector<int>& rows, int r) {
  return r >= 1 && r <= static_cast<int>(rows.size()) ? rows[r - 1] : 0;
}

}  // namespace

int content(int n, int row, int col) {
  const int m = n + 1;
  return ((col - row) % m + m) % m;
}

std::vector<int> conjugate(const std::vector<int>& rows) {
  std::vector<int> cols(rows.empty() ? 0 : rows.front(), 0);
  for (int r : rows)
    for (int c = 0; c < r; ++c) ++cols[c];
  return cols;
}

int hook_length(const std::vector<int>& rows, int row, int col) {
  const auto cols = conjugate(rows);
  return rows[row - 1] - col + cols[col - 1] - row + 1;
}

bool is_core(const CorePartition& lambda) {
  const auto cols = conjugate(lambda.rows);
  for (int r = 1; r <= static_cast<int>(lambda.rows.size()); ++r)
    for (int c = 1; c <= lambda.rows[r - 1]; ++c)
      if ((lambda.rows[r - 1] - c + cols[c - 1] - r + 1) % (lambda.n + 1) == 0) return false;
  return true;
}

bool is_bounded(const BoundedPartition& mu) {
  return std::all_of(mu.rows.begin(), mu.rows.end(), [&](int x) { return x >= 1 && x <= mu.n; });
}

bool contains(const std::vector<int>& outer, const std::vector<int>& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

CorePartition r_op(const CorePartition& lambda, int i) {
  const int len = static_cast<int>(lambda.rows.size());
  std::vector<int> addable;
  std::vector<int> removable;
  for (int r = 1; r <= len + 1; ++r) {
    const int cur = row_at(lambda.rows, r);
    if ((r == 1 || row_at(lambda.rows, r - 1) > cur) && content(lambda.n, r, cur + 1) == i) addable.push_back(r);
    if (r <= len && row_at(lambda.rows, r + 1) < cur && content(lambda.n, r, cur) == i) removable.push_back(r);
  }
  CorePartition out = lambda;
  if (!addable.empty()) {
    out.rows.resize(static_cast<std::size_t>(len) + 1, 0);
    for (int r : addable) ++out.rows[r - 1];
  } else {
    for (int r : removable) --out.rows[r - 1];
  }
  trim(out.rows);
  return out;
}

CorePartition c_map(const GroupElement& w) {
  require_type_a(w);
  CorePartition lambda{w.type().rank(), {}};
  auto word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) lambda = r_op(lambda, *it);
  return lambda;
}

BoundedPartition b_map(const CorePartition& lambda) {
  BoundedPartition mu{lambda.n, {}};
  const auto cols = conjugate(lambda.rows);
  for (int r = 1; r <= static_cast<int>(lambda.rows.size()); ++r) {
    int count = 0;
    for (int c = 1; c <= lambda.rows[r - 1]; ++c)
      if (lambda.rows[r - 1] - c + cols[c - 1] - r + 1 <= lambda.n) ++count;
    mu.rows.push_back(count);
  }
  trim(mu.rows);
  return mu;
}

GroupElement a_map(const BoundedPartition& mu) {
  if (!is_bounded(mu)) throw InvalidInput("a_map needs parts between 1 and n");
  std::vector<int> word;
  int size = 0;
  for (int r = static_cast<int>(mu.rows.size()); r >= 1; --r) {
    for (int c = mu.rows[r - 1]; c >= 1; --c) word.push_back(content(mu.n, r, c));
    size += mu.rows[r - 1];
  }
  GroupElement g = GroupElement::from_word(AffineType(Family::A, mu.n), word);
  if (g.length() != size || !g.is_min_rep()) throw InternalError("a_map produced a non-reduced word");
  return g;
}

BoundedPartition a_inverse(const GroupElement& w) { return b_map(c_map(w)); }

GroupElement TypeASegment::element() const { return GroupElement::from_word(AffineType(Family::A, n), word()); }

std::vector<TypeASegment> central_hook_factor(const CorePartition& lambda) {
  if (!is_core(lambda)) throw InvalidInput("not an (n+1)-core");
  const int n = lambda.n;
  CorePartition cur = lambda;
  std::vector<TypeASegment> out;
  auto strip = [&](int i, std::vector<int>& letters) {
    const auto before = cur.rows;
    cur = r_op(cur, i);
    if (!contains(before, cur.rows) || before == cur.rows) throw InternalError("central hook cell was not removable");
    letters.push_back(i);
  };
  while (!cur.rows.empty()) {
    int a = 0;
    while (a < static_cast<int>(cur.rows.size()) && cur.rows[a] >= a + 1) ++a;
    std::vector<int> letters;
    int arm = 0;
    while (cur.rows[a - 1] > a) {
      strip(content(n, a, cur.rows[a - 1]), letters);
      ++arm;
    }
    int leg = 0;
    for (;;) {
      const auto cols = conjugate(cur.rows);
      if (cols[a - 1] <= a) break;
      strip(content(n, cols[a - 1], a), letters);
      ++leg;
    }
    strip(content(n, a, a), letters);
    TypeASegment seg{n, arm, leg + 1};
    if (seg.j > n || seg.word() != letters) throw InternalError("central hook does not spell a segment");
    out.push_back(seg);
  }
  return out;
}

bool allowed_pair_A(int n, int i, int j, int k, int l) {
  return (i < k && j < l) || (k + l > n && i < k && j <= l) || (i + j > n && i <= k && j <= l);
}

bool core_leq(const GroupElement& v, const GroupElement& w) {
  require_type_a(v);
  require_type_a(w);
  return contains(c_map(w).rows, c_map(v).rows);
}

GroupElement spiral_from_factors(int n, int lead, int repeats, SpiralDirection dir) {
  if (n < 2 || repeats < 0) throw InvalidInput("spiral needs n >= 2");
  const AffineType t(Family::A, n);
  std::vector<int> word;
  auto append = [&](int i, int j) {
    auto w = type_a_segment_word(n, i, j);
    word.insert(word.end(), w.begin(), w.end());
  };
  if (dir == SpiralDirection::Ccw) {
    // lead n+1 reads C_{0,n+1} as s_1...s_n s_0, the word of C_{1,n}
    if (lead < 1 || lead > n + 1 || (lead + repeats) % n != 0)
      throw CongruenceError("ccw spiral needs j + k = 0 mod n");
    if (lead == n + 1)
      append(1, n);
    else
      append(0, lead);
    for (int r = 0; r < repeats; ++r) append(1, n);
  } else {
    if (lead < 0 || lead > n || (lead + repeats + 1) % n != 0)
      throw CongruenceError("cw spiral needs i + k + 1 = 0 mod n");
    append(lead, 1);
    for (int r = 0; r < repeats; ++r) append(n, 1);
  }
  GroupElement g = GroupElement::from_word(t, word);
  if (g.length() != static_cast<int>(word.size()) || !g.is_min_rep())
    throw InternalError("spiral word is not a reduced minimal representative");
  return g;
}

GroupElement spiral(int n, int k, SpiralDirection dir) {
  if (n < 2 || k < 1) throw InvalidInput("spiral needs n >= 2 and k >= 1");
  const int repeats = (k * n - 1) / (n + 1);
  const int lead_len = k * n - repeats * (n + 1);  // in 1..n+1
  return dir == SpiralDirection::Ccw ? spiral_from_factors(n, lead_len, repeats, dir)
                                     : spiral_from_factors(n, lead_len - 1, repeats, dir);
}

GroupElement diagram_involution(const GroupElement& w) {
  require_type_a(w);
  const int n = w.type().rank();
  std::vector<int> word(w.word().begin(), w.word().end());
  for (int& i : word)
    if (i != 0) i = n + 1 - i;
  return GroupElement::from_word(w.type(), word);
}

}  // namespace affgr
