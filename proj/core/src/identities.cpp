#include "affgr/identities.hpp"

#include "affgr/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace affgr {

TruncatedSeries partition_series(AffineType t, int N) {
  if (N < 0) throw InvalidInput("truncation must be nonnegative");
  const SegmentSystem& sys = SegmentSystem::get(t);
  const int m = sys.part_count();
  // below[p]: parts that may sit directly under p
  std::vector<std::vector<int>> below(m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (sys.allowed(q, p)) below[p].push_back(q);

  // g[s][p]: sequences of total s whose last (smallest) part is p
  std::vector<std::vector<BigInt>> g(N + 1, std::vector<BigInt>(m));
  for (int p = 0; p < m; ++p)
    if (sys.part(p).value <= N) g[sys.part(p).value][p] = 1;
  TruncatedSeries out(N);
  out[0] = 1;
  for (int s = 1; s <= N; ++s) {
    for (int p = 0; p < m; ++p) {
      const BigInt& here = g[s][p];
      if (here.is_zero()) continue;
      out[s] += here;
      for (int q : below[p]) {
        const int next = s + sys.part(q).value;
        if (next <= N) g[next][q] += here;
      }
    }
  }
  return out;
}

TruncatedSeries chain_sum_genfun(AffineType t, int N) {
  if (N < 0) throw InvalidInput("truncation must be nonnegative");
  const SegmentSystem& sys = SegmentSystem::get(t);
  const int m = sys.part_count();
  // h[p]: chains whose largest element is p
  std::vector<std::optional<TruncatedSeries>> h(m);
  std::vector<char> active(m, 0);
  std::function<const TruncatedSeries&(int)> chains_from = [&](int p) -> const TruncatedSeries& {
    if (h[p]) return *h[p];
    if (active[p]) throw InternalError("allowed-part relation has a cycle of distinct parts");
    active[p] = 1;
    TruncatedSeries acc = TruncatedSeries::one(N);
    for (int q = 0; q < m; ++q) {
      if (q == p || !sys.allowed(q, p)) continue;
      if (sys.part(q).value > sys.part(p).value) continue;
      acc += chains_from(q);
    }
    acc.shift(sys.part(p).value);
    if (sys.repeatable(p)) acc.divide_one_minus(sys.part(p).value);
    active[p] = 0;
    h[p] = std::move(acc);
    return *h[p];
  };
  TruncatedSeries out = TruncatedSeries::one(N);
  for (int p = 0; p < m; ++p) out += chains_from(p);
  return out;
}

RationalForm bott_form(AffineType t) {
  return RationalForm::over(IntPolynomial::one(), cartan(t).exponents());
}

RationalForm closed_form(AffineType t) {
  const int n = t.rank();
  IntPolynomial num = IntPolynomial::one();
  std::vector<int> den;
  auto range = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i) den.push_back(i);
  };
  switch (t.family()) {
    case Family::B:
      for (int i = 1; i < n; ++i) num *= IntPolynomial::one_plus(i);
      range(n, 2 * n - 1);
      break;
    case Family::C:
      for (int i = 1; i <= n; ++i) num *= IntPolynomial::one_plus(i);
      range(n + 1, 2 * n);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) num *= IntPolynomial::one_plus(i);
      range(n - 1, 2 * n - 2);
      break;
    case Family::G2:
      num = t_integer(6);
      den = {5, 6};
      break;
    default: throw UnsupportedFamily("no closed product formula for " + t.name());
  }
  return RationalForm::over(std::move(num), den);
}

namespace {

IdentityResult check_closed(AffineType t, int N) {
  IdentityResult r{"closed-form", t};
  const RationalForm closed = closed_form(t);
  const RationalForm bott = bott_form(t);
  r.exact = true;
  const bool exact_ok = closed.equals(bott);
  const TruncatedSeries counted = partition_series(t, N);
  r.checked_to = N;
  r.first_mismatch_degree = closed.expand(N).first_mismatch(counted);
  r.holds = exact_ok && !r.first_mismatch_degree;
  std::ostringstream d;
  d << closed.to_string() << (exact_ok ? " == " : " != ") << bott.to_string();
  if (r.first_mismatch_degree) d << "; partition count differs at degree " << *r.first_mismatch_degree;
  r.detail = d.str();
  return r;
}

}  // namespace

IdentityResult closed_form_B(int n, int N) { return check_closed(AffineType(Family::B, n), N); }
IdentityResult closed_form_C(int n, int N) { return check_closed(AffineType(Family::C, n), N); }
IdentityResult closed_form_D(int n, int N) { return check_closed(AffineType(Family::D, n), N); }
IdentityResult closed_form_G2(int N) { return check_closed(AffineType(Family::G2, 2), N); }

IdentityResult truncated_identity(AffineType t, int N) {
  IdentityResult r{"truncated", t};
  r.checked_to = N;
  const TruncatedSeries bott = bott_series(t, N);
  auto miss = partition_series(t, N).first_mismatch(bott);
  auto chain_miss = chain_sum_genfun(t, N).first_mismatch(bott);
  if (chain_miss && (!miss || *chain_miss < *miss)) miss = chain_miss;
  r.first_mismatch_degree = miss;
  r.holds = !miss;
  r.detail = miss ? "series differ at degree " + std::to_string(*miss) : "partition, chain and Bott series agree";
  return r;
}

// ---------------------------------------------------------------- F4

std::vector<ColoredPart> f4_repeatable_parts() { return {{11, 1}, {14, 0}, {15, 0}, {16, 0}}; }

const std::vector<long long>& f4_expected_nr_vector() {
  static const std::vector<long long> v{1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5, 5, 5, 4, 5, 5, 6, 6,
                                        6, 6, 6, 5, 5, 4, 4, 3, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  return v;
}

const std::vector<long long>& f4_expected_nre_vector() {
  static const std::vector<long long> v{1, 1, 1, 1, 1, 2, 2, 3, 2, 2, 2, 2, 2, 3, 3, 3, 2, 3, 4, 5, 5,
                                        4, 4, 4, 3, 3, 3, 3, 2, 1, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  return v;
}

namespace {

IntPolynomial size_polynomial(const std::vector<ColoredPartition>& list) {
  std::vector<long long> c;
  for (const auto& p : list) {
    if (static_cast<int>(c.size()) <= p.size()) c.resize(p.size() + 1, 0);
    ++c[p.size()];
  }
  return IntPolynomial::from_ints(c);
}

std::vector<long long> size_vector(const std::vector<ColoredPartition>& list) {
  std::vector<long long> c;
  for (const auto& p : list) {
    if (static_cast<int>(c.size()) <= p.size()) c.resize(p.size() + 1, 0);
    ++c[p.size()];
  }
  return c;
}

}  // namespace

IntPolynomial F4AppendixReport::nr_polynomial() const { return size_polynomial(nr); }
IntPolynomial F4AppendixReport::nre_polynomial() const { return size_polynomial(nre); }

F4AppendixReport f4_appendix_data() {
  const AffineType t(Family::F4, 4);
  const SegmentSystem& sys = SegmentSystem::get(t);
  const auto excluded = f4_repeatable_parts();
  auto is_excluded = [&](ColoredPart p) { return std::find(excluded.begin(), excluded.end(), p) != excluded.end(); };

  F4AppendixReport r;
  ColoredPartition cur;
  std::function<void()> grow = [&] {
    r.nr.push_back(cur);
    for (int q = 0; q < sys.part_count(); ++q) {
      const ColoredPart part = sys.part(q);
      if (is_excluded(part)) continue;
      if (!cur.parts.empty()) {
        const int last = *sys.part_id(cur.parts.back());
        if (q == last || !sys.allowed(q, last)) continue;
        if (part.value > cur.parts.back().value) continue;
      }
      cur.parts.push_back(part);
      grow();
      cur.parts.pop_back();
    }
  };
  grow();
  std::sort(r.nr.begin(), r.nr.end(), canonical_less);

  const ColoredPart special{11, 1};
  for (const auto& lambda : r.nr) {
    for (std::size_t k = 0; k <= lambda.parts.size(); ++k) {
      if (k > 0 && lambda.parts[k - 1].value < special.value) break;
      if (k < lambda.parts.size() && lambda.parts[k].value > special.value) continue;
      ColoredPartition with = lambda;
      with.parts.insert(with.parts.begin() + static_cast<std::ptrdiff_t>(k), special);
      if (is_affine_partition(t, with)) {
        r.nre.push_back(lambda);
        break;
      }
    }
  }
  r.nr_vector = size_vector(r.nr);
  r.nre_vector = size_vector(r.nre);
  for (const auto& lambda : r.nr) r.nr_max_size = std::max(r.nr_max_size, lambda.size());
  for (const auto& lambda : r.nr)
    if (lambda.size() == r.nr_max_size) r.nr_maximizers.push_back(lambda);
  return r;
}

IdentityResult f4_identity() {
  const AffineType t(Family::F4, 4);
  IdentityResult r{"f4-split", t};
  const F4AppendixReport data = f4_appendix_data();
  // G_NR (1 - t^11) + t^11 G_NRE over (1-t^11)(1-t^14)(1-t^15)(1-t^16)
  IntPolynomial num =
      data.nr_polynomial() * IntPolynomial::one_minus(11) + IntPolynomial::monomial(11) * data.nre_polynomial();
  const RationalForm split = RationalForm::over(std::move(num), {11, 14, 15, 16});
  const RationalForm bott = bott_form(t);
  r.exact = true;
  const bool exact_ok = split.equals(bott);
  const int N = 100;
  r.checked_to = N;
  r.first_mismatch_degree = split.expand(N).first_mismatch(partition_series(t, N));
  const bool vectors_ok = data.nr_vector == f4_expected_nr_vector() && data.nre_vector == f4_expected_nre_vector();
  r.holds = exact_ok && !r.first_mismatch_degree && vectors_ok;
  std::ostringstream d;
  d << "|NR|=" << data.nr.size() << " |NRE|=" << data.nre.size() << "; split form "
    << (exact_ok ? "equals" : "differs from") << " Bott";
  if (!vectors_ok) d << "; NR/NRE size vectors differ from the published ones";
  if (r.first_mismatch_degree) d << "; partition count differs at degree " << *r.first_mismatch_degree;
  r.detail = d.str();
  return r;
}

}  // namespace affgr
