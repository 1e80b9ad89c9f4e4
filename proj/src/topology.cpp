#include "raag/topology.hpp"

#include "raag/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace raag {

namespace {

constexpr std::size_t kMaxGridVertices = std::size_t{1} << 32;

void check_grid_params(int m, int s) {
  if (m < 1) throw ValidationError("grid dimension m must be positive");
  if (s < 1) throw ValidationError("bound s must be at least 1");
  if (m > VertexSet::kMaxVertex) throw ValidationError("grid dimension too large");
}

std::size_t checked_power(std::size_t base, int e) {
  std::size_t r = 1;
  for (int t = 0; t < e; ++t) {
    if (r > kMaxGridVertices / base) {
      throw ValidationError("lattice too large: (s+1)^m exceeds 2^32");
    }
    r *= base;
  }
  return r;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

GridGraph::GridGraph(int m, int s) : m_(m), s_(s) {
  check_grid_params(m, s);
  vertex_count_ = checked_power(static_cast<std::size_t>(s) + 1, m);
  stride_.resize(static_cast<std::size_t>(m) + 1);
  stride_[1] = 1;
  for (int d = 2; d <= m; ++d) stride_[d] = stride_[d - 1] * (static_cast<std::size_t>(s) + 1);
}

std::size_t GridGraph::edge_count() const {
  return static_cast<std::size_t>(m_) * static_cast<std::size_t>(s_) *
         (vertex_count_ / (static_cast<std::size_t>(s_) + 1));
}

Point GridGraph::point(std::size_t index) const {
  Point p(static_cast<std::size_t>(m_));
  for (int d = 0; d < m_; ++d) {
    p[d] = static_cast<int>(index % (static_cast<std::size_t>(s_) + 1));
    index /= static_cast<std::size_t>(s_) + 1;
  }
  return p;
}

std::size_t GridGraph::index(const Point& p) const {
  if (!in_cube(p)) throw ValidationError("point outside the cube");
  std::size_t idx = 0;
  for (int d = m_; d >= 1; --d) {
    idx = idx * (static_cast<std::size_t>(s_) + 1) + static_cast<std::size_t>(p[d - 1]);
  }
  return idx;
}

bool GridGraph::in_cube(const Point& p) const {
  if (p.size() != static_cast<std::size_t>(m_)) return false;
  return std::all_of(p.begin(), p.end(), [this](int c) { return c >= 0 && c <= s_; });
}

bool GridGraph::is_edge(const GridEdge& e) const {
  if (e.direction < 1 || e.direction > m_ || e.tail >= vertex_count_) return false;
  return point(e.tail)[e.direction - 1] < s_;
}

std::size_t GridGraph::head(const GridEdge& e) const {
  if (!is_edge(e)) throw ValidationError("not an edge of the grid");
  return e.tail + stride_[e.direction];
}

std::vector<GridEdge> GridGraph::edges() const {
  std::vector<GridEdge> out;
  out.reserve(edge_count());
  for (int d = 1; d <= m_; ++d) {
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      GridEdge e{v, d};
      if (is_edge(e)) out.push_back(e);
    }
  }
  return out;
}

GridGraph build_grid(int m, int s) { return GridGraph(m, s); }

std::size_t cycle_rank(std::size_t vertex_count,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  UnionFind uf(vertex_count);
  std::size_t components = vertex_count;
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (uf.unite(a, b)) --components;
  }
  return edges.size() + components - vertex_count;
}

std::size_t cycle_rank(const GridGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.tail, g.head(e));
  return cycle_rank(g.vertex_count(), pairs);
}

GridTree::GridTree(int m, int s) : grid_(m, s) {
  if (m < 2) throw ValidationError("spanning tree requires m >= 2");
  const std::size_t n = grid_.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  parent_.assign(n, Step{kUnset, 0, 0});
  depth_.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    Point p = grid_.point(v);
    for (int d = 1; d <= m; ++d) {
      for (int sign : {+1, -1}) {
        Point q = p;
        q[d - 1] += sign;
        if (!grid_.in_cube(q)) continue;
        std::size_t w = grid_.index(q);
        GridEdge e{sign > 0 ? v : w, d};
        if (seen[w] || !is_tree_edge(e)) continue;
        seen[w] = true;
        parent_[w] = Step{v, d, sign};
        depth_[w] = depth_[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InternalError("tree construction does not span the grid");
  }
}

bool GridTree::is_tree_edge(const GridEdge& e) const {
  if (!grid_.is_edge(e)) return false;
  const int m = grid_.m();
  if (e.direction == m) return true;
  Point c = grid_.point(e.tail);
  if (c[m - 1] != 0) return false;
  for (int k = 1; k < e.direction; ++k) {
    if (c[k - 1] != 0) return false;
  }
  return true;
}

std::vector<GridEdge> GridTree::tree_edges() const {
  std::vector<GridEdge> out;
  for (const auto& e : grid_.edges()) {
    if (is_tree_edge(e)) out.push_back(e);
  }
  return out;
}

std::vector<GridEdge> GridTree::nontree_edges() const {
  std::vector<GridEdge> out;
  for (const auto& e : grid_.edges()) {
    if (!is_tree_edge(e)) out.push_back(e);
  }
  return out;
}

Word GridTree::path_word(std::size_t v) const {
  if (v >= grid_.vertex_count()) throw ValidationError("vertex out of range");
  std::vector<Syllable> reversed;
  reversed.reserve(depth_[v]);
  while (v != 0) {
    const Step& st = parent_[v];
    reversed.push_back(Syllable{st.generator, BigInt(st.sign)});
    v = st.parent;
  }
  std::reverse(reversed.begin(), reversed.end());
  return reduce(reversed, grid_.m());
}

Word GridTree::loop_word(const GridEdge& e) const {
  if (!grid_.is_edge(e)) throw ValidationError("not an edge of the grid");
  if (is_tree_edge(e)) throw ValidationError("edge belongs to the spanning tree");
  return path_word(e.tail) * Word::generator(grid_.m(), e.direction) *
         path_word(grid_.head(e)).inverse();
}

std::vector<GridEdge> inductive_spanning_tree(int m, int s) {
  return GridTree(m, s).tree_edges();
}

Word nontree_loop_word(int m, int s, const GridEdge& e) {
  return GridTree(m, s).loop_word(e);
}

CubeComplex::CubeComplex(const SimplicialComplex& K, int s)
    : m_(K.ambient_size()), s_(s) {
  check_grid_params(m_, s);
  checked_power(static_cast<std::size_t>(s) + 1, m_);
  const SimplicialComplex flag = flag_completion(K).complex;
  faces_.resize(3);
  faces_[0] = {VertexSet{}};
  faces_[1] = flag.faces_of_size(1);
  faces_[2] = flag.faces_of_size(2);
  offsets_.resize(3);
  for (int d = 0; d <= 2; ++d) {
    std::size_t total = 0;
    for (VertexSet f : faces_[d]) {
      offsets_[d].push_back(total);
      total += cells_per_face(f);
    }
    offsets_[d].push_back(total);
  }
}

std::size_t CubeComplex::cells_per_face(VertexSet face) const {
  std::size_t n = 1;
  for (int d = 1; d <= m_; ++d) {
    n *= face.contains(d) ? static_cast<std::size_t>(s_) : static_cast<std::size_t>(s_) + 1;
  }
  return n;
}

std::size_t CubeComplex::local_index(VertexSet face, const Point& anchor) const {
  std::size_t idx = 0;
  for (int d = m_; d >= 1; --d) {
    const int radix = face.contains(d) ? s_ : s_ + 1;
    const int c = anchor[d - 1];
    if (c < 0 || c >= radix) throw ValidationError("cell anchor outside the cube");
    idx = idx * static_cast<std::size_t>(radix) + static_cast<std::size_t>(c);
  }
  return idx;
}

Point CubeComplex::local_anchor(VertexSet face, std::size_t local) const {
  Point p(static_cast<std::size_t>(m_));
  for (int d = 1; d <= m_; ++d) {
    const std::size_t radix = face.contains(d) ? static_cast<std::size_t>(s_)
                                               : static_cast<std::size_t>(s_) + 1;
    p[d - 1] = static_cast<int>(local % radix);
    local /= radix;
  }
  return p;
}

std::size_t CubeComplex::cell_count(int dim) const {
  if (dim < 0 || dim > 2) throw ValidationError("cells are stored up to dimension 2");
  return offsets_[dim].back();
}

CubeComplex::Cell CubeComplex::cell(int dim, std::size_t index) const {
  if (index >= cell_count(dim)) throw ValidationError("cell index out of range");
  const auto& off = offsets_[dim];
  auto it = std::upper_bound(off.begin(), off.end(), index);
  const std::size_t k = static_cast<std::size_t>(it - off.begin()) - 1;
  return Cell{faces_[dim][k], local_anchor(faces_[dim][k], index - off[k])};
}

std::size_t CubeComplex::cell_index(const Cell& c) const {
  const int dim = c.face.size();
  if (dim > 2) throw ValidationError("cells are stored up to dimension 2");
  const auto& fs = faces_[dim];
  auto it = std::lower_bound(fs.begin(), fs.end(), c.face);
  if (it == fs.end() || *it != c.face) throw ValidationError("face not in the complex");
  const std::size_t k = static_cast<std::size_t>(it - fs.begin());
  return offsets_[dim][k] + local_index(c.face, c.anchor);
}

IntegerMatrix CubeComplex::boundary(int dim) const {
  if (dim != 1 && dim != 2) throw ValidationError("boundary dimension must be 1 or 2");
  IntegerMatrix b(cell_count(dim - 1), cell_count(dim));
  for (std::size_t col = 0; col < cell_count(dim); ++col) {
    Cell c = cell(dim, col);
    auto shifted = [&](int direction) {
      Point p = c.anchor;
      ++p[direction - 1];
      return p;
    };
    if (dim == 1) {
      const int i = c.face.min();
      b.add(cell_index(Cell{VertexSet{}, shifted(i)}), col, 1);
      b.add(cell_index(Cell{VertexSet{}, c.anchor}), col, -1);
    } else {
      const int i = c.face.min();
      const int j = c.face.max();
      b.add(cell_index(Cell{VertexSet{i}, c.anchor}), col, 1);
      b.add(cell_index(Cell{VertexSet{j}, shifted(i)}), col, 1);
      b.add(cell_index(Cell{VertexSet{i}, shifted(j)}), col, -1);
      b.add(cell_index(Cell{VertexSet{j}, c.anchor}), col, -1);
    }
  }
  return b;
}

CubeComplex build_cube_complex(const SimplicialComplex& K, int s) {
  return CubeComplex(K, s);
}

BigInt predicted_cell_count(const SimplicialComplex& K, int s, int dim) {
  const int m = K.ambient_size();
  const SimplicialComplex flag = flag_completion(K).complex;
  BigInt per_face = 1;
  for (int t = 0; t < dim; ++t) per_face *= s;
  for (int t = dim; t < m; ++t) per_face *= s + 1;
  return per_face * static_cast<unsigned>(flag.faces_of_size(dim).size());
}

HomologyResult h1_rank_and_torsion(const CubeComplex& c) {
  const IntegerMatrix d1 = c.boundary(1);
  const IntegerMatrix d2 = c.boundary(2);
  if (!(d1 * d2).is_zero()) {
    throw InternalError("boundary of boundary is nonzero");
  }
  const std::size_t rank1 = rank(d1);
  const std::vector<BigInt> invariants = smith_invariants(d2);
  HomologyResult result;
  result.rank = BigInt(c.cell_count(1)) - rank1 - invariants.size();
  for (const auto& d : invariants) {
    if (d > 1) result.torsion.push_back(d);
  }
  return result;
}

}  // namespace raag
