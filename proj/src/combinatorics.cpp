#include "raag/combinatorics.hpp"

#include "raag/errors.hpp"

#include <algorithm>
#include <string>

namespace raag {

namespace {

void check_label(int v, int m) {
  if (v < 1 || v > m) {
    throw ValidationError("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(m));
  }
}

void check_size(int m) {
  if (m < 0 || m > VertexSet::kMaxVertex) {
    throw ValidationError("vertex count must lie in 0.." +
                          std::to_string(VertexSet::kMaxVertex));
  }
}

// Keeps only inclusion-maximal sets, sorted by bitmask.
std::vector<VertexSet> antichain(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [s](VertexSet k) { return s.subset_of(k); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Calls fn on every k-element subset of `set`, in colexicographic order.
template <typename Fn>
void for_each_k_subset(VertexSet set, int k, Fn&& fn) {
  const std::vector<int> labels = set.labels();
  const int n = static_cast<int>(labels.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) idx[t] = t;
  while (true) {
    VertexSet sub;
    for (int t : idx) sub.insert(labels[t]);
    fn(sub);
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) return;
    ++idx[t];
    for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  VertexSet px = p | x;
  int pivot = px.min();
  int best = -1;
  for (int u : px.labels()) {
    int n = (p & g.neighbours(u)).size();
    if (n > best) {
      best = n;
      pivot = u;
    }
  }
  for (int v : (p - g.neighbours(pivot)).labels()) {
    VertexSet rv = r;
    rv.insert(v);
    bron_kerbosch(g, rv, p & g.neighbours(v), x & g.neighbours(v), out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> labels) {
  for (int v : labels) insert(v);
}

VertexSet VertexSet::range(int m) {
  check_size(m);
  return from_bits(m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1));
}

VertexSet VertexSet::from_labels(const std::vector<int>& labels) {
  VertexSet s;
  for (int v : labels) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  check_label(v, kMaxVertex);
  bits_ |= std::uint64_t{1} << (v - 1);
}

void VertexSet::erase(int v) {
  if (v >= 1 && v <= kMaxVertex) bits_ &= ~(std::uint64_t{1} << (v - 1));
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

Graph::Graph(int m, const std::vector<std::pair<int, int>>& edges)
    : m_(m), adj_(static_cast<std::size_t>(m) + 1) {
  check_size(m);
  for (auto [u, v] : edges) {
    check_label(u, m);
    check_label(v, m);
    if (u == v) {
      throw ValidationError("loop at vertex " + std::to_string(u));
    }
    if (adj_[u].contains(v)) {
      throw ValidationError("duplicate edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "}");
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= m_; ++u) {
    for (int v : adj_[u].labels()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int u = 1; u <= m_; ++u) twice += static_cast<std::size_t>(adj_[u].size());
  return twice / 2;
}

Graph Graph::induced(VertexSet J) const {
  Graph h = *this;
  for (int u = 0; u <= m_; ++u) {
    h.adj_[u] = J.contains(u) ? (adj_[u] & J) : VertexSet{};
  }
  return h;
}

SimplicialComplex::SimplicialComplex(int m, VertexSet vertices,
                                     std::vector<VertexSet> maximal)
    : m_(m), vertices_(vertices), maximal_(std::move(maximal)) {}

SimplicialComplex SimplicialComplex::from_maximal_faces(
    int m, const std::vector<VertexSet>& faces) {
  check_size(m);
  VertexSet all = VertexSet::range(m);
  std::vector<VertexSet> sets;
  for (VertexSet f : faces) {
    if (!f.subset_of(all)) {
      throw ValidationError("face has a vertex outside 1.." + std::to_string(m));
    }
    if (!f.empty()) sets.push_back(f);
  }
  for (int v = 1; v <= m; ++v) sets.push_back(VertexSet{v});
  return SimplicialComplex(m, all, antichain(std::move(sets)));
}

SimplicialComplex SimplicialComplex::from_maximal_faces(
    int m, const std::vector<std::vector<int>>& faces) {
  check_size(m);
  std::vector<VertexSet> sets;
  for (const auto& f : faces) {
    VertexSet s;
    for (int v : f) {
      check_label(v, m);
      if (s.contains(v)) {
        throw ValidationError("face repeats vertex " + std::to_string(v));
      }
      s.insert(v);
    }
    sets.push_back(s);
  }
  return from_maximal_faces(m, sets);
}

bool SimplicialComplex::contains(VertexSet face) const {
  if (face.empty()) return true;
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [face](VertexSet f) { return face.subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out{VertexSet{}};
  for (VertexSet f : maximal_) {
    // every non-empty submask of f
    const std::uint64_t full = f.bits();
    for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
      out.push_back(VertexSet::from_bits(sub));
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> SimplicialComplex::faces_of_size(int k) const {
  std::vector<VertexSet> out;
  if (k == 0) return {VertexSet{}};
  for (VertexSet f : maximal_) {
    if (f.size() < k) continue;
    for_each_k_subset(f, k, [&](VertexSet sub) { out.push_back(sub); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet f : maximal_) d = std::max(d, f.size() - 1);
  return d;
}

Graph SimplicialComplex::one_skeleton() const {
  std::vector<std::pair<int, int>> edges;
  for (VertexSet e : faces_of_size(2)) {
    auto l = e.labels();
    edges.emplace_back(l[0], l[1]);
  }
  return Graph(m_, edges);
}

std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  if (within.empty()) return out;
  Graph h = g.induced(within);
  bron_kerbosch(h, VertexSet{}, within, VertexSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex clique_complex(const Graph& g) {
  return SimplicialComplex(g.vertex_count(), g.vertices(),
                           maximal_cliques(g, g.vertices()));
}

SimplicialComplex restriction(const SimplicialComplex& K, VertexSet J) {
  if (!J.subset_of(VertexSet::range(K.m_))) {
    throw ValidationError("restriction set has a vertex outside 1.." +
                          std::to_string(K.m_));
  }
  std::vector<VertexSet> sets;
  for (VertexSet f : K.maximal_) {
    VertexSet r = f & J;
    if (!r.empty()) sets.push_back(r);
  }
  return SimplicialComplex(K.m_, K.vertices_ & J, antichain(std::move(sets)));
}

std::vector<VertexSet> components(const Graph& g, VertexSet J) {
  std::vector<VertexSet> out;
  VertexSet left = J;
  while (!left.empty()) {
    VertexSet comp{left.min()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.labels()) next = next | g.neighbours(v);
      next = (next & J) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

int component_count(const Graph& g, VertexSet J) {
  return static_cast<int>(components(g, J).size());
}

ComponentLabeling connected_components(const SimplicialComplex& K) {
  ComponentLabeling result;
  result.label.assign(static_cast<std::size_t>(K.ambient_size()) + 1, -1);
  auto comps = components(K.one_skeleton(), K.vertices());
  result.count = static_cast<int>(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c].labels()) result.label[v] = static_cast<int>(c);
  }
  return result;
}

FlagCheck is_flag(const SimplicialComplex& K) {
  Graph g = K.one_skeleton();
  std::optional<VertexSet> best;
  for (VertexSet clique : maximal_cliques(g, K.vertices())) {
    if (K.contains(clique)) continue;
    // Smallest non-face inside this clique; every smaller subset is a face.
    const std::uint64_t full = clique.bits();
    std::optional<VertexSet> found;
    for (int k = 3; k <= clique.size() && !found; ++k) {
      for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
        if (std::popcount(sub) != k) continue;
        VertexSet s = VertexSet::from_bits(sub);
        if (!K.contains(s) && (!found || s < *found)) found = s;
      }
    }
    if (found && (!best || found->size() < best->size() ||
                  (found->size() == best->size() && *found < *best))) {
      best = found;
    }
  }
  return FlagCheck{!best.has_value(), best};
}

FlagCompletion flag_completion(const SimplicialComplex& K) {
  bool was_flag = is_flag(K).flag;
  return FlagCompletion{restriction(clique_complex(K.one_skeleton()), K.vertices()),
                        was_flag};
}

std::vector<int> lex_bfs_order(const Graph& g) {
  const int m = g.vertex_count();
  // Each unvisited vertex carries a label: the list of visit times (descending)
  // of its visited neighbours. Pick the lexicographically largest each round.
  std::vector<std::vector<int>> label(static_cast<std::size_t>(m) + 1);
  std::vector<bool> visited(static_cast<std::size_t>(m) + 1, false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(m));
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int v = 1; v <= m; ++v) {
      if (visited[v]) continue;
      if (pick < 0 || label[v] > label[pick]) pick = v;
    }
    visited[pick] = true;
    order.push_back(pick);
    for (int u : g.neighbours(pick).labels()) {
      if (!visited[u]) label[u].push_back(m - step);
    }
  }
  return order;
}

bool is_chordal(const Graph& g) {
  // The reverse of a LexBFS order is a perfect elimination ordering iff g is
  // chordal. Check: for each v, its neighbours visited earlier form a set X;
  // the latest-visited u in X must be adjacent to all of X \ {u}.
  std::vector<int> order = lex_bfs_order(g);
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    VertexSet earlier;
    for (int u : g.neighbours(v).labels()) {
      if (position[u] < static_cast<int>(k)) earlier.insert(u);
    }
    if (earlier.size() < 2) continue;
    int parent = -1;
    for (int u : earlier.labels()) {
      if (parent < 0 || position[u] > position[parent]) parent = u;
    }
    VertexSet rest = earlier;
    rest.erase(parent);
    if (!rest.subset_of(g.neighbours(parent))) return false;
  }
  return true;
}

}  // namespace raag
