#pragma once

#include "raag/bigint.hpp"
#include "raag/combinatorics.hpp"
#include "raag/freegroup.hpp"
#include "raag/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace raag {

using Point = std::vector<int>;

/// Axis-parallel unit segment [tail, tail + e_direction] of the lattice grid.
struct GridEdge {
  std::size_t tail = 0;
  int direction = 1;

  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

/// The graph E_m^(s): lattice points of {0..s}^m joined by unit segments.
/// Points are indexed in mixed radix s+1 with coordinate 1 least significant.
class GridGraph {
 public:
  GridGraph(int m, int s);

  int m() const { return m_; }
  int s() const { return s_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const;

  Point point(std::size_t index) const;
  std::size_t index(const Point& p) const;
  bool in_cube(const Point& p) const;
  /// Head vertex index of an edge.
  std::size_t head(const GridEdge& e) const;
  bool is_edge(const GridEdge& e) const;
  /// Every edge, ordered by direction then tail index.
  std::vector<GridEdge> edges() const;

 private:
  int m_;
  int s_;
  std::size_t vertex_count_;
  std::vector<std::size_t> stride_;
};

GridGraph build_grid(int m, int s);

/// E - V + (number of components) of an arbitrary graph.
std::size_t cycle_rank(std::size_t vertex_count,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges);
std::size_t cycle_rank(const GridGraph& g);

/// The inductive maximal tree of E_m^(s): every edge in direction m, and an
/// edge in direction p < m iff its tail has c_1 = ... = c_{p-1} = 0 and c_m = 0.
/// Paths and loop words are traced through the tree from the origin.
class GridTree {
 public:
  GridTree(int m, int s);

  const GridGraph& grid() const { return grid_; }
  bool is_tree_edge(const GridEdge& e) const;
  std::vector<GridEdge> tree_edges() const;
  std::vector<GridEdge> nontree_edges() const;

  /// Word read along the unique tree path from the origin to vertex v.
  Word path_word(std::size_t v) const;
  /// Tree path to the tail, the edge itself, tree path back from the head.
  /// Throws ValidationError for tree edges.
  Word loop_word(const GridEdge& e) const;

 private:
  GridGraph grid_;
  // Parent edge along the tree towards the origin: (parent vertex, generator,
  // sign of the step from parent to child).
  struct Step {
    std::size_t parent;
    int generator;
    int sign;
  };
  std::vector<Step> parent_;
  std::vector<std::size_t> depth_;
};

/// Tree edges of GridTree(m, s).
std::vector<GridEdge> inductive_spanning_tree(int m, int s);
Word nontree_loop_word(int m, int s, const GridEdge& e);

/// Cube complex L_K^(s) = (I_s, Z_{s+1})^K truncated to cells of dimension
/// at most 2. A d-cell is a face I with |I| = d plus an anchor a with
/// a_i in 0..s-1 for i in I and a_j in 0..s otherwise.
class CubeComplex {
 public:
  struct Cell {
    VertexSet face;
    Point anchor;

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  CubeComplex(const SimplicialComplex& K, int s);

  int m() const { return m_; }
  int s() const { return s_; }
  std::size_t cell_count(int dim) const;
  Cell cell(int dim, std::size_t index) const;
  std::size_t cell_index(const Cell& c) const;

  /// Rows are (dim-1)-cells, columns dim-cells; dim in {1, 2}.
  /// Edges point toward increasing coordinate; a square on directions
  /// i < j has boundary e_i(a) + e_j(a + e_i) - e_i(a + e_j) - e_j(a).
  IntegerMatrix boundary(int dim) const;

 private:
  int m_;
  int s_;
  // faces_[d] lists the faces of size d; offsets_[d][k] is the first cell
  // index of face k, with one trailing total.
  std::vector<std::vector<VertexSet>> faces_;
  std::vector<std::vector<std::size_t>> offsets_;

  std::size_t cells_per_face(VertexSet face) const;
  std::size_t local_index(VertexSet face, const Point& anchor) const;
  Point local_anchor(VertexSet face, std::size_t local) const;
};

CubeComplex build_cube_complex(const SimplicialComplex& K, int s);

/// Predicted d-cell count: sum over faces I with |I| = d of s^d (s+1)^(m-d).
BigInt predicted_cell_count(const SimplicialComplex& K, int s, int dim);

struct HomologyResult {
  BigInt rank;
  /// Invariant factors > 1 of the Smith form of the 2-boundary.
  std::vector<BigInt> torsion;
};

/// H_1 of a cube complex over Z. Throws InternalError when d1 * d2 != 0.
HomologyResult h1_rank_and_torsion(const CubeComplex& c);

}  // namespace raag
