#include "oracles.hpp"

#include "raag/combinatorics.hpp"
#include "raag/errors.hpp"
#include "raag/sampling.hpp"

#include <doctest.h>

#include <algorithm>

using namespace raag;

namespace {

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s{3, 1, 64};
  CHECK(s.size() == 3);
  CHECK(s.min() == 1);
  CHECK(s.max() == 64);
  CHECK(s.labels() == std::vector<int>{1, 3, 64});
  s.erase(3);
  CHECK_FALSE(s.contains(3));
  CHECK_THROWS_AS(VertexSet{65}, ValidationError);
  CHECK(VertexSet::range(4) == VertexSet{1, 2, 3, 4});
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), ValidationError);
  Graph g(3, {{2, 1}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("clique complex of the pentagon") {
  const SimplicialComplex K = clique_complex(oracle::pentagon());
  CHECK(K.faces_of_size(0).size() == 1);
  CHECK(K.faces_of_size(1).size() == 5);
  CHECK(K.faces_of_size(2).size() == 5);
  CHECK(K.faces_of_size(3).empty());
  CHECK(K.one_skeleton() == oracle::pentagon());
}

TEST_CASE("clique complex of small graphs") {
  const SimplicialComplex full = clique_complex(Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(full.faces().size() == 8);
  const SimplicialComplex discrete = clique_complex(Graph(3, {}));
  CHECK(discrete.faces().size() == 4);
  CHECK(discrete.dimension() == 0);
}

TEST_CASE("maximal cliques agree with exhaustive search") {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& g : oracle::all_graphs(m)) {
      CHECK(sorted(maximal_cliques(g, g.vertices())) == sorted(oracle::maximal_cliques(g)));
    }
  }
}

TEST_CASE("restriction") {
  const SimplicialComplex K = clique_complex(oracle::pentagon());
  const SimplicialComplex R = restriction(K, VertexSet{1, 3, 5});
  CHECK(R.vertices() == VertexSet{1, 3, 5});
  CHECK(R.faces_of_size(2) == std::vector<VertexSet>{VertexSet{1, 5}});
  const ComponentLabeling c = connected_components(R);
  CHECK(c.count == 2);
  CHECK(c.label[1] == c.label[5]);
  CHECK(c.label[1] != c.label[3]);
  CHECK(components(K.one_skeleton(), VertexSet{1, 3, 5}) ==
        std::vector<VertexSet>{VertexSet{1, 5}, VertexSet{3}});

  CHECK(restriction(K, VertexSet{}).faces().size() == 1);
  CHECK(connected_components(restriction(K, VertexSet{})).count == 0);
  CHECK(restriction(K, K.vertices()) == K);
  CHECK_THROWS_AS(restriction(K, VertexSet{6}), ValidationError);
}

TEST_CASE("component counts") {
  CHECK(connected_components(clique_complex(Graph(4, {}))).count == 4);
  CHECK(connected_components(clique_complex(Graph(3, {{1, 2}, {2, 3}, {1, 3}}))).count == 1);
  for (const auto& g : oracle::all_graphs(4)) {
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      CHECK(component_count(g, VertexSet::from_bits(mask)) ==
            oracle::components(g, VertexSet::from_bits(mask)));
    }
  }
}

TEST_CASE("flag checks") {
  const SimplicialComplex hollow =
      SimplicialComplex::from_maximal_faces(3, std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 3}});
  const FlagCheck f = is_flag(hollow);
  CHECK_FALSE(f.flag);
  REQUIRE(f.witness.has_value());
  CHECK(*f.witness == VertexSet{1, 2, 3});
  CHECK(is_flag(clique_complex(oracle::pentagon())).flag);
  CHECK(is_flag(clique_complex(Graph(4, {}))).flag);

  const FlagCompletion c = flag_completion(hollow);
  CHECK_FALSE(c.input_was_flag);
  CHECK(c.complex.contains(VertexSet{1, 2, 3}));
}

TEST_CASE("flag check agrees with brute force on random complexes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = draw(rng, 2, 6);
    std::vector<VertexSet> faces;
    const int n = draw(rng, 1, 5);
    for (int k = 0; k < n; ++k) {
      VertexSet f;
      for (int v = 1; v <= m; ++v) {
        if (draw(rng, 0, 2) == 0) f.insert(v);
      }
      if (!f.empty()) faces.push_back(f);
    }
    const SimplicialComplex K = SimplicialComplex::from_maximal_faces(m, faces);
    const FlagCheck got = is_flag(K);
    CHECK(got.flag == oracle::is_flag(K));
    if (!got.flag) {
      REQUIRE(got.witness.has_value());
      CHECK_FALSE(K.contains(*got.witness));
      CHECK(got.witness->size() >= 3);
      for (int v : got.witness->labels()) {
        VertexSet smaller = *got.witness;
        smaller.erase(v);
        CHECK(K.contains(smaller));
      }
    }
  }
}

TEST_CASE("chordality on named graphs") {
  CHECK_FALSE(is_chordal(oracle::pentagon()));
  CHECK(is_chordal(oracle::chordal_example()));
  CHECK(is_chordal(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}})));
  CHECK(is_chordal(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})));
  CHECK_FALSE(is_chordal(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
}

TEST_CASE("chordality agrees with the chordless-cycle oracle") {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& g : oracle::all_graphs(m)) {
      CHECK(is_chordal(g) == !oracle::has_chordless_cycle(g));
    }
  }
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Graph g = random_graph(draw(rng, 7, 8), rng);
    CHECK(is_chordal(g) == !oracle::has_chordless_cycle(g));
  }
}

TEST_CASE("lex bfs visits every vertex once") {
  const auto order = lex_bfs_order(oracle::chordal_example());
  std::vector<int> s = order;
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<int>{1, 2, 3, 4, 5});
}
