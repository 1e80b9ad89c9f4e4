#include "oracles.hpp"

#include "raag/errors.hpp"
#include "raag/rewriting.hpp"
#include "raag/sampling.hpp"

#include <doctest.h>

using namespace raag;

namespace {

Word g(int k, const BigInt& e, int rank = 3) { return Word::generator(rank, k, e); }

CommutatorDescriptor D(std::vector<int> ks, int j, int i, std::vector<BigInt> ex) {
  return CommutatorDescriptor{std::move(ks), j, i, std::move(ex)};
}

// Drops factors that contain a zero exponent, i.e. that equal the identity.
std::vector<SignedFactor> nontrivial(const std::vector<SignedFactor>& in) {
  std::vector<SignedFactor> out;
  for (const auto& f : in) {
    bool zero = false;
    for (const auto& e : f.descriptor.exponents) zero = zero || e == 0;
    if (!zero) out.push_back(f);
  }
  cancel_adjacent(out);
  return out;
}

}  // namespace

TEST_CASE("rewrite in F2: examples") {
  const FactorizedWord one = rewrite_f2(parse_word("1,2,1^-1,2^-1", 2));
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0].descriptor == D({}, 2, 1, {-1, -1}));
  CHECK(one.factors[0].sign == -1);
  CHECK(rewrite_f2(Word::identity(2)).factors.empty());
  const Word w = parse_word("1^2,2,1^-2,2^-1", 2);
  CHECK(evaluate(rewrite_f2(w)) == w);
  CHECK_THROWS_AS(rewrite_f2(parse_word("1,2", 2)), ValidationError);
  CHECK_THROWS_AS(rewrite_f2(parse_word("3,3^-1,1", 3)), ValidationError);
}

TEST_CASE("rewrite in F2: random words") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 300; ++k) {
    const Word w = random_f2_commutator_word(rng, 40);
    const F2Rewrite r = rewrite_f2_traced(w);
    CHECK(oracle::letters(evaluate(r.result)) == oracle::letters(w));
    for (std::size_t t = 1; t < r.syllable_counts.size(); ++t) {
      CHECK(r.syllable_counts[t] < r.syllable_counts[t - 1]);
    }
    CHECK(r.syllable_counts.back() == 0);
    for (const auto& f : r.result.factors) {
      CHECK(f.descriptor.ks.empty());
      CHECK(is_structurally_valid(f.descriptor));
    }
  }
}

TEST_CASE("lift path") {
  const auto square = lift_path(parse_word("1,2,1^-1,2^-1", 2), 2, 1);
  CHECK(square == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  const auto back = lift_path(parse_word("1,1^-1", 2), 2, 1);
  CHECK(back.front() == back.back());
  CHECK(lift_path(parse_word("1", 3), 3, 1).back() == Point{1, 0, 0});
  try {
    lift_path(parse_word("2,1^3", 2), 2, 2);
    FAIL("expected a bound error");
  } catch (const BoundError& e) {
    CHECK(e.prefix_letters() == 4);
  }
  CHECK_THROWS_AS(lift_path(parse_word("1^-1", 2), 2, 2), BoundError);
}

TEST_CASE("decompose loops") {
  for (int m = 2; m <= 3; ++m) {
    for (int s = 1; s <= 2; ++s) {
      const GridTree tree(m, s);
      const auto edges = tree.nontree_edges();
      for (const auto& e : edges) {
        const auto d = decompose_loop(tree.loop_word(e), tree);
        REQUIRE(d.size() == 1);
        CHECK(d[0].edge == e);
        CHECK(d[0].sign == 1);
      }
      for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const Word w = tree.loop_word(edges[k]) * tree.loop_word(edges[k + 1]).inverse();
        const auto d = decompose_loop(w, tree);
        REQUIRE(d.size() == 2);
        CHECK(d[0].edge == edges[k]);
        CHECK(d[1].edge == edges[k + 1]);
        CHECK(d[1].sign == -1);
      }
    }
  }
  CHECK(decompose_loop(parse_word("3,3^-1", 3), 3, 1).empty());
  CHECK_THROWS_AS(decompose_loop(parse_word("1", 2), 2, 1), ValidationError);
}

TEST_CASE("basis expression reproduces the m = 3 identities") {
  const GridTree tree(3, 2);
  for (const auto& e : tree.nontree_edges()) {
    const Point c = tree.grid().point(e.tail);
    const BigInt c1 = c[0], c2 = c[1], c3 = c[2];
    std::vector<SignedFactor> want;
    if (e.direction == 1) {
      want = {{D({2}, 3, 1, {-c2, -c3, -c1}), 1},
              {D({}, 3, 1, {-c3, -c1}), -1},
              {D({}, 3, 1, {-c3, -c1 - 1}), 1},
              {D({2}, 3, 1, {-c2, -c3, -c1 - 1}), -1}};
    } else {
      want = {{D({}, 2, 1, {-c2, -c1}), 1},
              {D({1}, 3, 2, {-c1, -c3, -c2}), 1},
              {D({}, 3, 2, {-c3, -c2}), -1},
              {D({}, 3, 2, {-c3, -c2 - 1}), 1},
              {D({1}, 3, 2, {-c1, -c3, -c2 - 1}), -1},
              {D({}, 2, 1, {-c2 - 1, -c1}), -1}};
    }
    const FactorizedWord got = express_in_basis(tree.loop_word(e), 3, 2);
    CHECK(got.factors == nontrivial(want));
  }
}

TEST_CASE("basis expression for larger m") {
  for (int m = 2; m <= 5; ++m) {
    const int smax = m <= 4 ? 2 : 1;
    for (int s = 1; s <= smax; ++s) {
      const GridTree tree(m, s);
      for (const auto& e : tree.nontree_edges()) {
        const Word w = tree.loop_word(e);
        const FactorizedWord f = express_in_basis(w, m, s);
        CHECK(evaluate(f) == w);
        for (const auto& x : f.factors) {
          CHECK(is_structurally_valid(x.descriptor));
          for (const auto& ex : x.descriptor.exponents) CHECK(abs(ex) <= s);
        }
      }
    }
  }
}

TEST_CASE("basis expression of random loop products") {
  std::mt19937_64 rng(43);
  const GridTree tree(3, 2);
  const auto edges = tree.nontree_edges();
  for (int k = 0; k < 100; ++k) {
    Word w = Word::identity(3);
    const int n = draw(rng, 1, 3);
    for (int t = 0; t < n; ++t) {
      const Word chi = tree.loop_word(edges[draw(rng, 0, static_cast<int>(edges.size()) - 1)]);
      w = w * (draw(rng, 0, 1) ? chi : chi.inverse());
    }
    CHECK(evaluate(express_in_basis(w, 3, 2)) == w);
  }
  CHECK(express_in_basis(Word::identity(3), 3, 2).factors.empty());
  CHECK_THROWS_AS(express_in_basis(parse_word("1^3,2,1^-3,2^-1", 3), 3, 2), BoundError);
}

TEST_CASE("commutator with a letter") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 300; ++k) {
    CommutatorDescriptor d;
    d.j = draw(rng, 3, 6);
    d.i = draw(rng, 1, d.j - 1);
    for (int v = 1; v < d.j; ++v) {
      if (v != d.i && draw(rng, 0, 1)) d.ks.push_back(v);
    }
    for (std::size_t t = 0; t < d.length(); ++t) d.exponents.push_back(draw(rng, 1, 2) * (draw(rng, 0, 1) ? 1 : -1));
    int t = 0;
    for (int v = 1; v <= 7 && t == 0; ++v) {
      if (!d.vertex_set().contains(v) && draw(rng, 0, 1)) t = v;
    }
    if (t == 0) t = 7;
    const BigInt e = draw(rng, 1, 2) * (draw(rng, 0, 1) ? 1 : -1);
    const auto f = commutator_with_letter(t, e, d);
    const FactorizedWord fw{7, f};
    CHECK(evaluate(fw) == commutator(g(t, e, 7), realize_nested(d, 7)));
    for (const auto& x : f) CHECK(is_structurally_valid(x.descriptor));
  }
  CHECK_THROWS_AS(commutator_with_letter(1, 1, D({}, 2, 1, {1, 1})), ValidationError);
}

TEST_CASE("factor cancellation") {
  std::vector<SignedFactor> f = {{D({}, 2, 1, {1, 1}), 1}, {D({}, 3, 1, {1, 1}), 1},
                                 {D({}, 3, 1, {1, 1}), -1}, {D({}, 2, 1, {1, 1}), -1}};
  cancel_adjacent(f);
  CHECK(f.empty());
}
