#include "affgr/poset.hpp"

#include "affgr/errors.hpp"

#include <algorithm>
#include <map>

namespace affgr {

std::vector<std::vector<int>> RankedPoset::up() const {
  std::vector<std::vector<int>> u(size());
  for (std::size_t v = 0; v < size(); ++v)
    for (int d : down[v]) u[d].push_back(static_cast<int>(v));
  return u;
}

std::vector<int> RankedPoset::rank_sizes() const {
  std::vector<int> r;
  for (int x : rank) {
    if (x >= static_cast<int>(r.size())) r.resize(x + 1, 0);
    ++r[x];
  }
  return r;
}

namespace {

struct Graph {
  const RankedPoset* p;
  std::vector<std::vector<int>> up;
  std::vector<int> color;
};

// One round of refinement on both graphs with a shared palette, so that
// colours mean the same thing on either side.
int refine(Graph& a, Graph& b) {
  std::map<std::vector<int>, int> palette;
  auto signature = [](const Graph& g, int v) {
    std::vector<int> sig{g.color[v], -1};
    std::vector<int> d;
    for (int x : g.p->down[v]) d.push_back(g.color[x]);
    std::sort(d.begin(), d.end());
    sig.insert(sig.end(), d.begin(), d.end());
    sig.push_back(-2);
    std::vector<int> u;
    for (int x : g.up[v]) u.push_back(g.color[x]);
    std::sort(u.begin(), u.end());
    sig.insert(sig.end(), u.begin(), u.end());
    return sig;
  };
  std::vector<std::vector<int>> sa(a.p->size()), sb(b.p->size());
  for (std::size_t v = 0; v < sa.size(); ++v) palette.emplace(sa[v] = signature(a, static_cast<int>(v)), 0);
  for (std::size_t v = 0; v < sb.size(); ++v) palette.emplace(sb[v] = signature(b, static_cast<int>(v)), 0);
  int next = 0;
  for (auto& [k, c] : palette) c = next++;
  for (std::size_t v = 0; v < sa.size(); ++v) a.color[v] = palette[sa[v]];
  for (std::size_t v = 0; v < sb.size(); ++v) b.color[v] = palette[sb[v]];
  return next;
}

std::vector<int> histogram(const std::vector<int>& color, int k) {
  std::vector<int> h(k, 0);
  for (int c : color) ++h[c];
  return h;
}

bool has(const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

}  // namespace

bool isomorphic(const RankedPoset& pa, const RankedPoset& pb, std::size_t step_cap) {
  if (pa.size() != pb.size()) return false;
  if (pa.rank_sizes() != pb.rank_sizes()) return false;
  Graph a{&pa, pa.up(), pa.rank};
  Graph b{&pb, pb.up(), pb.rank};
  int classes = 0;
  for (;;) {
    const int k = refine(a, b);
    if (histogram(a.color, k) != histogram(b.color, k)) return false;
    if (k == classes) break;
    classes = k;
  }
  const std::size_t n = pa.size();
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return pa.rank[x] < pa.rank[y]; });
  std::vector<std::vector<int>> by_color(classes);
  for (std::size_t v = 0; v < n; ++v) by_color[b.color[v]].push_back(static_cast<int>(v));

  std::vector<int> fwd(n, -1), back(n, -1);
  std::size_t steps = 0;
  auto consistent = [&](int x, int y) {
    for (int d : pa.down[x])
      if (fwd[d] >= 0 && !has(pb.down[y], fwd[d])) return false;
    for (int u : a.up[x])
      if (fwd[u] >= 0 && !has(b.up[y], fwd[u])) return false;
    for (int d : pb.down[y])
      if (back[d] >= 0 && !has(pa.down[x], back[d])) return false;
    for (int u : b.up[y])
      if (back[u] >= 0 && !has(a.up[x], back[u])) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    if (++steps > step_cap) throw ResourceLimit("poset isomorphism search exceeded its step cap");
    const int x = order[pos];
    for (int y : by_color[a.color[x]]) {
      if (back[y] >= 0 || !consistent(x, y)) continue;
      fwd[x] = y;
      back[y] = x;
      if (self(self, pos + 1)) return true;
      fwd[x] = -1;
      back[y] = -1;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace affgr
