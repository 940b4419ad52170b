#include "affgr/smoothness.hpp"

#include "affgr/errors.hpp"
#include "affgr/parallel.hpp"
#include "affgr/typea.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace affgr {

std::vector<GroupElement> bruhat_lower_covers(const GroupElement& w) {
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  const auto word = w.word();
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::vector<int> shorter;
    shorter.reserve(word.size() - 1);
    for (std::size_t i = 0; i < word.size(); ++i)
      if (i != k) shorter.push_back(word[i]);
    auto g = GroupElement::from_reduced_word(w.type(), std::move(shorter));
    if (g && g->is_min_rep() && seen.insert(*g).second) out.push_back(std::move(*g));
  }
  return out;
}

std::vector<GroupElement> lower_interval(const GroupElement& w, std::size_t cap) {
  if (!w.is_min_rep()) throw InvalidInput("lower_interval needs a minimal representative");
  std::unordered_set<GroupElement, GroupElementHash> seen{w};
  std::vector<GroupElement> out{w};
  std::vector<GroupElement> frontier{w};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& u : frontier)
      for (auto& v : bruhat_lower_covers(u))
        if (seen.insert(v).second) {
          out.push_back(v);
          next.push_back(std::move(v));
          if (out.size() > cap) throw ResourceLimit("lower interval exceeds cap");
        }
    frontier = std::move(next);
  }
  return out;
}

std::vector<GroupElement> lower_interval_by_filter(const GroupElement& w, const QuotientLayers& layers,
                                                   BruhatOracle& oracle) {
  if (static_cast<int>(layers.size()) <= w.length()) throw InvalidInput("enumeration does not reach length(w)");
  std::vector<GroupElement> out;
  for (int len = 0; len <= w.length(); ++len)
    for (const auto& v : layers[len])
      if (oracle.leq(v, w)) out.push_back(v);
  return out;
}

IntPolynomial length_histogram(const std::vector<GroupElement>& elements) {
  std::vector<BigInt> c;
  for (const auto& g : elements) {
    if (g.length() >= static_cast<int>(c.size())) c.resize(g.length() + 1);
    ++c[g.length()];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poincare(const GroupElement& w) { return length_histogram(lower_interval(w)); }

int asymmetry_depth(const IntPolynomial& p) {
  const int d = p.degree();
  for (int i = 1; 2 * i <= d; ++i)
    if (p[i] != p[d - i]) return i;
  return 0;
}

bool is_palindromic(const IntPolynomial& p) { return p.is_palindromic(); }
bool is_palindromic(const GroupElement& w) { return poincare(w).is_palindromic(); }

// s w is compared in the quotient: when s w is longer but not minimal it
// lies in the coset of w, so only a longer minimal s w breaks the condition.
bool is_cpo(const GroupElement& w) {
  for (int i : support(w)) {
    const auto up = w.left_ascent(i);
    if (up && up->is_min_rep()) return false;
  }
  return true;
}

bool is_chain(const GroupElement& w) {
  const IntPolynomial p = poincare(w);
  for (const auto& c : p.coeffs())
    if (c != 1) return false;
  return true;
}

std::optional<int> branching_number(AffineType t) {
  int limit = 0;
  for (int e : cartan(t).exponents()) limit += e;
  const TruncatedSeries s = bott_series(t, limit + 1);
  for (int i = 0; i <= s.truncation(); ++i)
    if (s[i] > 1) return i;
  return std::nullopt;
}

namespace {

std::vector<int> gyl_rank_counts(AffineType t, const ColoredPartition& lambda) {
  std::vector<int> counts(lambda.size() + 1, 0);
  for (const auto& mu : gyl_lower_interval(t, lambda)) ++counts[mu.size()];
  return counts;
}

}  // namespace

bool is_thin(AffineType t, const ColoredPartition& lambda) {
  const auto counts = gyl_rank_counts(t, lambda);
  const int top = lambda.size();
  const int b = branching_number(t).value_or(top + 1);
  for (int i = 0; i < b && i <= top; ++i)
    if (counts[i] != counts[top - i]) return false;
  return true;
}

bool gyl_rank_symmetric(AffineType t, const ColoredPartition& lambda) {
  const auto counts = gyl_rank_counts(t, lambda);
  return std::equal(counts.begin(), counts.end(), counts.rbegin());
}

bool is_extra_thin(AffineType t, const ColoredPartition& lambda) {
  if (!is_thin(t, lambda)) return false;
  if (lambda.empty()) return true;
  const SegmentSystem& sys = SegmentSystem::get(t);
  const GroupElement& top = sys.segment(*sys.part_id(lambda.parts.front())).element;
  int count = 0;
  for (const auto& v : bruhat_lower_covers(pi_inv(t, lambda))) {
    const ColoredPartition mu = pi(v);
    if (mu.empty() || left_weak_leq(sys.segment(*sys.part_id(mu.parts.front())).element, top)) ++count;
  }
  return count <= 1;
}

RankedPoset bruhat_interval_poset(const GroupElement& w) {
  const auto elems = lower_interval(w);
  std::unordered_map<GroupElement, int, GroupElementHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  RankedPoset p;
  for (const auto& g : elems) {
    p.rank.push_back(g.length());
    std::vector<int> d;
    for (const auto& c : bruhat_lower_covers(g)) d.push_back(index.at(c));
    p.down.push_back(std::move(d));
  }
  return p;
}

RankedPoset gyl_interval_poset(AffineType t, const ColoredPartition& lambda) {
  const auto elems = gyl_lower_interval(t, lambda);
  std::map<ColoredPartition, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  RankedPoset p;
  for (const auto& mu : elems) {
    p.rank.push_back(mu.size());
    std::vector<int> d;
    for (const auto& c : gyl_lower_covers(t, mu)) d.push_back(index.at(c));
    p.down.push_back(std::move(d));
  }
  return p;
}

bool yb_nice(const GroupElement& w) {
  return isomorphic(bruhat_interval_poset(w), gyl_interval_poset(w.type(), pi(w)));
}

ElementReport classify(const GroupElement& w, bool with_yb) {
  ElementReport r;
  r.partition = pi(w);
  r.word.assign(w.word().begin(), w.word().end());
  r.length = w.length();
  r.poincare = poincare(w);
  r.palindromic = r.poincare.is_palindromic();
  r.asymmetry_depth = asymmetry_depth(r.poincare);
  r.cpo = is_cpo(w);
  r.chain = std::all_of(r.poincare.coeffs().begin(), r.poincare.coeffs().end(), [](const BigInt& c) { return c == 1; });
  r.yb_nice = with_yb && yb_nice(w);
  return r;
}

std::vector<ElementReport> classify_all(AffineType t, int max_len, bool with_yb, std::size_t element_cap) {
  const QuotientLayers layers = enumerate_quotient(t, max_len, element_cap);
  std::vector<const GroupElement*> flat;
  for (const auto& layer : layers)
    for (const auto& g : layer) flat.push_back(&g);
  if (flat.size() > element_cap)
    throw ResourceLimit(t.name() + " has " + std::to_string(flat.size()) + " elements up to length " +
                        std::to_string(max_len) + ", over the cap of " + std::to_string(element_cap));
  std::vector<ElementReport> out(flat.size());
  const unsigned workers = worker_count();
  std::vector<BruhatOracle> oracles(workers);
  parallel_for(
      flat.size(),
      [&](unsigned worker, std::size_t idx) {
        const GroupElement& w = *flat[idx];
        BruhatOracle& oracle = oracles[worker];
        if (oracle.memo_size() > 4'000'000) oracle.clear();
        ElementReport& r = out[idx];
        r.partition = pi(w);
        r.word.assign(w.word().begin(), w.word().end());
        r.length = w.length();
        r.poincare = length_histogram(lower_interval_by_filter(w, layers, oracle));
        r.palindromic = r.poincare.is_palindromic();
        r.asymmetry_depth = asymmetry_depth(r.poincare);
        r.chain = std::all_of(r.poincare.coeffs().begin(), r.poincare.coeffs().end(),
                              [](const BigInt& c) { return c == 1; });
        r.cpo = is_cpo(w);
        r.yb_nice = with_yb && yb_nice(w);
      },
      workers);
  return out;
}

MwReport empirical_mW(AffineType t, int max_len, const std::vector<ElementReport>& reports) {
  MwReport m;
  m.max_len = max_len;
  for (const auto& r : reports) {
    if (r.length > max_len) continue;
    ++m.elements;
    if (r.palindromic) continue;
    ++m.non_palindromic;
    if (r.asymmetry_depth > m.value) {
      m.value = r.asymmetry_depth;
      m.witnesses.clear();
    }
    if (r.asymmetry_depth == m.value) m.witnesses.push_back(r.partition);
  }
  (void)t;
  return m;
}

MwReport empirical_mW(AffineType t, int max_len) { return empirical_mW(t, max_len, classify_all(t, max_len)); }

StatedMw stated_mW(AffineType t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return {n == 1 ? 0 : 2, std::nullopt};
    case Family::B: return {n == 3 ? 2 : 4, std::nullopt};
    case Family::C: return {2, std::nullopt};
    case Family::D: return {n - 2, n - 1};
    case Family::E6: return {3, std::nullopt};
    case Family::E7: return {4, std::nullopt};
    case Family::E8: return {6, std::nullopt};
    case Family::F4: return {4, std::nullopt};
    case Family::G2: return {4, std::nullopt};
  }
  return {};
}

std::vector<ColoredPartition> extra_thin_partitions(AffineType t, int max_parts) {
  const SegmentSystem& sys = SegmentSystem::get(t);
  std::vector<ColoredPartition> all{ColoredPartition{}};
  std::vector<ColoredPartition> level{ColoredPartition{}};
  for (int k = 1; k <= max_parts; ++k) {
    std::vector<ColoredPartition> next;
    for (const auto& mu : level) {
      for (int p = 0; p < sys.part_count(); ++p) {
        if (!mu.empty() && !sys.allowed(*sys.part_id(mu.parts.front()), p)) continue;
        ColoredPartition lambda = mu;
        lambda.parts.insert(lambda.parts.begin(), sys.part(p));
        if (is_extra_thin(t, lambda)) next.push_back(std::move(lambda));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

std::vector<ColoredPartition> search_exceptional_palindromics(AffineType t, int max_parts) {
  std::vector<ColoredPartition> out;
  for (const auto& lambda : extra_thin_partitions(t, max_parts))
    if (poincare(pi_inv(t, lambda)).is_palindromic()) out.push_back(lambda);
  return out;
}

namespace {

ColoredPartition from_element(const GroupElement& g) { return pi(g); }

std::vector<ColoredPartition> type_a_predicted(AffineType t, int max_len) {
  const int n = t.rank();
  std::vector<ColoredPartition> out;
  if (n == 1) {
    for (const auto& layer : enumerate_quotient(t, max_len))
      for (const auto& g : layer) out.push_back(pi(g));
    return out;
  }
  out.push_back({});
  // one cpo for each segment C_{i,j} with i+j <= n, which is its largest factor
  for (int i = 0; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      std::vector<int> word;
      auto add = [&](int a, int b) {
        auto w = type_a_segment_word(n, a, b);
        word.insert(word.end(), w.begin(), w.end());
      };
      if (i < j) {
        for (int s = 0; s <= i; ++s) add(s, j - i + s);
      } else {
        for (int s = 0; s < j; ++s) add(i - j + 1 + s, 1 + s);
      }
      out.push_back(from_element(GroupElement::from_word(t, word)));
    }
  for (int k = 1; k * n <= max_len; ++k) {
    out.push_back(from_element(spiral(n, k, SpiralDirection::Ccw)));
    out.push_back(from_element(spiral(n, k, SpiralDirection::Cw)));
  }
  return out;
}

ColoredPartition staircase(int k, int top_color = 0) {
  ColoredPartition p;
  for (int v = k; v >= 1; --v) p.parts.push_back({v, v == k ? top_color : 0});
  return p;
}

ColoredPartition row(int j, int color = 0) {
  ColoredPartition p;
  if (j > 0) p.parts.push_back({j, color});
  return p;
}

}  // namespace

std::vector<ColoredPartition> predicted_palindromics(AffineType t, int max_len, const PalindromicFixtures& fixtures) {
  const int n = t.rank();
  std::vector<ColoredPartition> out;
  switch (t.family()) {
    case Family::A: out = type_a_predicted(t, max_len); break;
    case Family::B:
      for (int j = 0; j < 2 * n; ++j) out.push_back(row(j));
      for (int k = 2; k < n; ++k) out.push_back(staircase(k));
      if (n == 3) out.push_back(uncolored({3, 3, 3}));
      break;
    case Family::C:
      for (int j = 0; j <= 2 * n; ++j) out.push_back(row(j));
      for (int k = 2; k <= n; ++k) out.push_back(staircase(k));
      break;
    case Family::D:
      for (int j = 0; j <= n - 2; ++j) out.push_back(row(j));
      out.push_back(row(n - 1, 0));
      out.push_back(row(n - 1, 1));
      out.push_back(row(2 * n - 2));
      for (int k = 2; k <= n - 2; ++k) out.push_back(staircase(k));
      out.push_back(staircase(n - 1, 0));
      out.push_back(staircase(n - 1, 1));
      break;
    default: {
      auto it = fixtures.find(t.name());
      if (it == fixtures.end()) throw InvalidInput("no palindromic fixture for " + t.name());
      out = it->second;
    }
  }
  std::erase_if(out, [&](const ColoredPartition& p) { return p.size() > max_len; });
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace affgr
