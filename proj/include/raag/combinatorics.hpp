#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace raag {

/// A set of vertex labels drawn from 1..64, stored as a bitmask
/// (label v lives in bit v-1).
class VertexSet {
 public:
  static constexpr int kMaxVertex = 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> labels);

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {1..m}
  static VertexSet range(int m);
  static VertexSet from_labels(const std::vector<int>& labels);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Smallest label; requires non-empty.
  int min() const { return std::countr_zero(bits_) + 1; }
  /// Largest label; requires non-empty.
  int max() const { return 64 - std::countl_zero(bits_); }

  void insert(int v);
  void erase(int v);

  std::vector<int> labels() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Orders by bitmask value, which is the order used for subset tables.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 1..m.
class Graph {
 public:
  Graph() = default;
  /// Throws ValidationError on loops, duplicate edges or labels outside 1..m.
  Graph(int m, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(m_); }
  VertexSet neighbours(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  /// Edges as (i, j) with i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  /// Subgraph induced on J; labels are preserved, vertex count stays m.
  Graph induced(VertexSet J) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int m_ = 0;
  std::vector<VertexSet> adj_ = std::vector<VertexSet>(1);
};

/// Abstract simplicial complex with an explicit vertex set, stored by its
/// maximal faces. The empty face is always present.
class SimplicialComplex {
 public:
  /// Complex on vertex set {1..m}; every label is a vertex even when it is
  /// not covered by a listed face.
  static SimplicialComplex from_maximal_faces(int m,
                                              const std::vector<VertexSet>& faces);
  static SimplicialComplex from_maximal_faces(
      int m, const std::vector<std::vector<int>>& faces);

  int ambient_size() const { return m_; }
  VertexSet vertices() const { return vertices_; }
  const std::vector<VertexSet>& maximal_faces() const { return maximal_; }

  bool contains(VertexSet face) const;
  /// All faces (including the empty face), sorted by size then bitmask.
  std::vector<VertexSet> faces() const;
  std::vector<VertexSet> faces_of_size(int k) const;
  int dimension() const;

  Graph one_skeleton() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int m, VertexSet vertices, std::vector<VertexSet> maximal);
  friend SimplicialComplex restriction(const SimplicialComplex&, VertexSet);
  friend SimplicialComplex clique_complex(const Graph&);

  int m_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> maximal_;
};

/// Maximal cliques of g restricted to `within` (Bron-Kerbosch with pivoting).
std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within);

SimplicialComplex clique_complex(const Graph& g);

/// Full subcomplex K_J. Throws ValidationError if J has labels outside 1..m.
SimplicialComplex restriction(const SimplicialComplex& K, VertexSet J);

struct ComponentLabeling {
  int count = 0;
  /// label[v] = component id (0-based, numbered by smallest vertex) for
  /// vertices of the complex, -1 otherwise; indexed 0..m.
  std::vector<int> label;
};

ComponentLabeling connected_components(const SimplicialComplex& K);

/// Number of connected components of the induced subgraph g[J]; 0 for J = {}.
int component_count(const Graph& g, VertexSet J);

/// Vertex sets of the connected components of g[J], ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet J);

struct FlagCheck {
  bool flag = true;
  /// A minimal non-face with at least three vertices when !flag.
  std::optional<VertexSet> witness;
};

FlagCheck is_flag(const SimplicialComplex& K);

struct FlagCompletion {
  SimplicialComplex complex;
  bool input_was_flag;
};

/// Replaces K by the clique complex of its 1-skeleton.
FlagCompletion flag_completion(const SimplicialComplex& K);

/// Lexicographic breadth-first search order (first visited vertex first).
std::vector<int> lex_bfs_order(const Graph& g);

bool is_chordal(const Graph& g);

}  // namespace raag
