#include "oracles.hpp"

#include "raag/errors.hpp"
#include "raag/generators.hpp"
#include "raag/matrix.hpp"
#include "raag/sampling.hpp"
#include "raag/topology.hpp"

#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

using namespace raag;

namespace {

Word g(int k, int e) { return Word::generator(3, k, e); }

bool is_spanning_tree(const GridGraph& grid, const std::vector<GridEdge>& edges) {
  std::vector<std::size_t> parent(grid.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges) {
    const std::size_t a = find(e.tail), b = find(grid.head(e));
    if (a == b) return false;
    parent[a] = b;
  }
  return edges.size() + 1 == grid.vertex_count();
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int spread) {
  IntegerMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (draw(rng, 0, 2) == 0) a.set(i, j, draw(rng, -spread, spread));
    }
  }
  return a;
}

}  // namespace

TEST_CASE("grid sizes") {
  CHECK(build_grid(2, 1).vertex_count() == 4);
  CHECK(build_grid(2, 1).edge_count() == 4);
  CHECK(build_grid(2, 2).vertex_count() == 9);
  CHECK(build_grid(2, 2).edge_count() == 12);
  CHECK(build_grid(3, 1).edge_count() == 12);
  CHECK(build_grid(3, 2).edge_count() == 54);
  const GridGraph grid(3, 2);
  CHECK(grid.edges().size() == grid.edge_count());
  for (std::size_t v = 0; v < grid.vertex_count(); ++v) CHECK(grid.index(grid.point(v)) == v);
  CHECK_FALSE(grid.is_edge(GridEdge{grid.index({2, 0, 0}), 1}));
  CHECK_THROWS_AS(GridGraph(0, 1), ValidationError);
}

TEST_CASE("cycle rank") {
  for (int s = 1; s <= 4; ++s) CHECK(cycle_rank(build_grid(2, s)) == std::size_t(s * s));
  CHECK(cycle_rank(build_grid(3, 1)) == 5);
  CHECK(cycle_rank(4, {{0, 1}, {1, 2}, {1, 3}}) == 0);
  CHECK(cycle_rank(4, {{0, 1}, {2, 3}}) == 0);
  CHECK(cycle_rank(3, {{0, 1}, {1, 2}, {2, 0}}) == 1);
  for (int m = 2; m <= 4; ++m) {
    for (int s = 1; s <= 3; ++s) CHECK(BigInt(cycle_rank(build_grid(m, s))) == count_W_closed(m, s));
  }
}

TEST_CASE("spanning tree") {
  CHECK(inductive_spanning_tree(2, 1).size() == 3);
  const GridTree t2(2, 1);
  REQUIRE(t2.nontree_edges().size() == 1);
  CHECK(t2.nontree_edges()[0].direction == 1);
  CHECK(t2.grid().point(t2.nontree_edges()[0].tail) == Point{0, 1});
  CHECK(inductive_spanning_tree(3, 1).size() == 7);
  CHECK(GridTree(3, 1).nontree_edges().size() == 5);
  CHECK_THROWS_AS(GridTree(1, 2), ValidationError);
  for (int m = 2; m <= 4; ++m) {
    for (int s = 1; s <= 3; ++s) {
      const GridTree tree(m, s);
      CHECK(is_spanning_tree(tree.grid(), tree.tree_edges()));
      CHECK(tree.tree_edges().size() + tree.nontree_edges().size() == tree.grid().edge_count());
      CHECK(BigInt(tree.nontree_edges().size()) == count_W_closed(m, s));
      for (const auto& e : tree.nontree_edges()) CHECK(e.direction < m);
    }
  }
}

TEST_CASE("path words") {
  const GridTree tree(4, 2);
  for (std::size_t v = 0; v < tree.grid().vertex_count(); ++v) {
    const Point c = tree.grid().point(v);
    // g_{m-1}^c g_{m-2}^c ... g_1^c g_m^c
    std::vector<Syllable> raw;
    for (int k = 3; k >= 1; --k) raw.push_back(Syllable{k, c[k - 1]});
    raw.push_back(Syllable{4, c[3]});
    CHECK(tree.path_word(v) == reduce(raw, 4));
  }
}

TEST_CASE("loop words for m = 2") {
  const GridTree tree(2, 2);
  for (const auto& e : tree.nontree_edges()) {
    const Point c = tree.grid().point(e.tail);
    const Word want = reduce({{1, c[0]}, {2, c[1]}, {1, 1}, {2, -c[1]}, {1, -c[0] - 1}}, 2);
    CHECK(tree.loop_word(e) == want);
  }
}

TEST_CASE("loop words for m = 3 follow the displayed pattern") {
  for (int s = 1; s <= 2; ++s) {
    const GridTree tree(3, s);
    for (const auto& e : tree.nontree_edges()) {
      const Point c = tree.grid().point(e.tail);
      const int c1 = c[0], c2 = c[1], c3 = c[2];
      Word want;
      if (e.direction == 1) {
        want = g(2, c2) * g(1, c1) * g(3, c3) * g(1, 1) * g(3, -c3) * g(1, -c1 - 1) * g(2, -c2);
      } else {
        want = g(2, c2) * g(1, c1) * g(3, c3) * g(2, 1) * g(3, -c3) * g(1, -c1) * g(2, -c2 - 1);
      }
      CHECK(tree.loop_word(e) == want);
      CHECK(nontree_loop_word(3, s, e) == want);
    }
  }
}

TEST_CASE("loop word properties") {
  for (int m = 2; m <= 4; ++m) {
    const GridTree tree(m, 2);
    std::set<std::string> seen;
    for (const auto& e : tree.nontree_edges()) {
      const Word w = tree.loop_word(e);
      CHECK_FALSE(w.is_identity());
      CHECK(in_commutator_subgroup(w));
      CHECK(seen.insert(format_word(w)).second);
    }
    CHECK_THROWS_AS(tree.loop_word(tree.tree_edges().front()), ValidationError);
  }
}

TEST_CASE("cube complex cell counts") {
  std::mt19937_64 rng(23);
  std::vector<Graph> graphs = {oracle::pentagon(), oracle::chordal_example(), Graph(3, {})};
  for (int k = 0; k < 5; ++k) graphs.push_back(random_graph(4, rng));
  for (const auto& gr : graphs) {
    const SimplicialComplex K = clique_complex(gr);
    for (int s = 1; s <= 2; ++s) {
      const CubeComplex C(K, s);
      for (int d = 0; d <= 2; ++d) CHECK(BigInt(C.cell_count(d)) == predicted_cell_count(K, s, d));
      CHECK((C.boundary(1) * C.boundary(2)).is_zero());
      for (int d = 0; d <= 2; ++d) {
        for (std::size_t t = 0; t < C.cell_count(d); ++t) CHECK(C.cell_index(C.cell(d, t)) == t);
      }
    }
  }
  const CubeComplex c5(clique_complex(oracle::pentagon()), 1);
  CHECK(c5.cell_count(0) == 32);
  CHECK(c5.cell_count(1) == 80);
  CHECK(c5.cell_count(2) == 40);
}

TEST_CASE("discrete complex gives the grid") {
  const CubeComplex C(clique_complex(Graph(3, {})), 2);
  CHECK(C.cell_count(2) == 0);
  CHECK(C.cell_count(1) == build_grid(3, 2).edge_count());
  for (int m = 2; m <= 4; ++m) {
    for (int s = 1; s <= 3; ++s) {
      const HomologyResult h = h1_rank_and_torsion(CubeComplex(clique_complex(Graph(m, {})), s));
      CHECK(h.rank == count_J(m, s));
      CHECK(h.torsion.empty());
    }
  }
}

TEST_CASE("first homology") {
  const HomologyResult edge = h1_rank_and_torsion(CubeComplex(clique_complex(Graph(2, {{1, 2}})), 1));
  CHECK(edge.rank == 0);
  const HomologyResult c5 = h1_rank_and_torsion(CubeComplex(clique_complex(oracle::pentagon()), 1));
  CHECK(c5.rank == 10);
  CHECK(c5.torsion.empty());
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::pair<int, int>> e;
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) e.emplace_back(a, b);
    for (int s = 1; s <= 2; ++s) {
      CHECK(h1_rank_and_torsion(CubeComplex(clique_complex(Graph(m, e)), s)).rank == 0);
    }
  }
}

TEST_CASE("boundary ranks agree with rational elimination") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 6; ++k) {
    const CubeComplex C(clique_complex(random_graph(4, rng)), 1 + k % 2);
    for (int d = 1; d <= 2; ++d) {
      const IntegerMatrix b = C.boundary(d);
      CHECK(rank(b) == oracle::rational_rank(to_dense(b)));
    }
  }
}

TEST_CASE("matrix rank and Smith form") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const IntegerMatrix a = random_matrix(rng, draw(rng, 1, 7), draw(rng, 1, 7), 1 + k % 6);
    const std::size_t want = oracle::rational_rank(to_dense(a));
    CHECK(rank(a) == want);
    CHECK(bareiss_rank(to_dense(a)) == want);
    const auto inv = smith_invariants(a);
    CHECK(inv.size() == want);
    for (std::size_t t = 1; t < inv.size(); ++t) CHECK(inv[t] % inv[t - 1] == 0);
    CHECK(inv == dense_smith_invariants(to_dense(a)));
  }
  IntegerMatrix d(2, 2);
  d.set(0, 0, 2);
  d.set(1, 1, 3);
  CHECK(smith_invariants(d) == std::vector<BigInt>{1, 6});
  IntegerMatrix t(2, 2);
  t.set(0, 0, 2);
  t.set(0, 1, 4);
  t.set(1, 0, 6);
  t.set(1, 1, 8);
  CHECK(smith_invariants(t) == std::vector<BigInt>{2, 4});
}

TEST_CASE("triplet round trip") {
  const CubeComplex C(clique_complex(oracle::pentagon()), 1);
  const IntegerMatrix b = C.boundary(2);
  std::stringstream ss;
  write_triplets(ss, b);
  CHECK(read_triplets(ss) == b);
  std::stringstream bad("2 2 1\n0 5 1\n");
  CHECK_THROWS_AS(read_triplets(bad), ValidationError);
}
