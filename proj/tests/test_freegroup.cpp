#include "oracles.hpp"

#include "raag/errors.hpp"
#include "raag/freegroup.hpp"
#include "raag/sampling.hpp"

#include <doctest.h>

using namespace raag;

namespace {

Word w(std::vector<Syllable> s, int rank = 3) { return reduce(s, rank); }

Word random_word(std::mt19937_64& rng, int rank, int syllables) {
  std::vector<Syllable> raw;
  for (int k = 0; k < syllables; ++k) {
    raw.push_back(Syllable{draw(rng, 1, rank), draw(rng, -3, 3)});
  }
  return reduce(raw, rank);
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(w({{1, 2}, {1, -2}}).is_identity());
  CHECK(w({{1, 1}, {2, 1}, {2, -1}, {1, 1}}).syllables() == std::vector<Syllable>{{1, 2}});
  CHECK(w({{1, 1}, {2, 3}}).syllables() == std::vector<Syllable>{{1, 1}, {2, 3}});
  CHECK(w({{1, 0}, {2, 0}}).is_identity());
  CHECK_THROWS_AS(w({{4, 1}}), ValidationError);
  CHECK_THROWS_AS(w({{0, 1}}), ValidationError);
}

TEST_CASE("reduce matches letter-by-letter reduction") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    std::vector<Syllable> raw;
    std::vector<int> letters;
    const int n = draw(rng, 0, 12);
    for (int t = 0; t < n; ++t) {
      const int g = draw(rng, 1, 3);
      const int e = draw(rng, -3, 3);
      raw.push_back(Syllable{g, e});
      const auto p = oracle::power_letters(g, e);
      letters.insert(letters.end(), p.begin(), p.end());
    }
    const Word r = reduce(raw, 3);
    CHECK(oracle::letters(r) == oracle::reduce_letters(letters));
    CHECK(reduce(r.syllables(), 3) == r);
  }
}

TEST_CASE("group laws") {
  const Word a = w({{1, 1}});
  CHECK((a * w({{1, -1}})).is_identity());
  CHECK(invert(w({{1, 2}, {2, -1}})).syllables() == std::vector<Syllable>{{2, 1}, {1, -2}});
  CHECK(Word::identity(3) * a == a);
  CHECK_THROWS_AS(multiply(Word::generator(2, 1), Word::generator(3, 1)), ValidationError);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Word x = random_word(rng, 3, 6), y = random_word(rng, 3, 6), z = random_word(rng, 3, 6);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.inverse()).is_identity());
  }
}

TEST_CASE("commutators") {
  const Word g1 = Word::generator(3, 1), g2 = Word::generator(3, 2);
  CHECK(commutator(g1, g2).syllables() ==
        std::vector<Syllable>{{1, -1}, {2, -1}, {1, 1}, {2, 1}});
  CHECK(commutator(g1, g1).is_identity());
  CHECK(commutator(g1, Word::identity(3)).is_identity());
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sums(w({{1, 2}, {2, -1}, {1, -2}, {2, 1}}, 2)) == std::vector<BigInt>{0, 0});
  CHECK(exponent_sums(w({{1, 3}})) == std::vector<BigInt>{3, 0, 0});
  CHECK_FALSE(in_commutator_subgroup(w({{1, 3}})));
}

TEST_CASE("realize nested commutators") {
  CommutatorDescriptor d{{}, 2, 1, {1, 1}};
  CHECK(realize_nested(d, 2).syllables() ==
        std::vector<Syllable>{{2, -1}, {1, -1}, {2, 1}, {1, 1}});
  CommutatorDescriptor e{{1}, 3, 2, {1, 1, 1}};
  const Word g1 = Word::generator(3, 1);
  const Word inner = realize_nested(CommutatorDescriptor{{}, 3, 2, {1, 1}}, 3);
  CHECK(realize_nested(e, 3) == g1.inverse() * inner.inverse() * g1 * inner);
  CHECK_THROWS_AS(realize_nested(CommutatorDescriptor{{}, 2, 1, {0, 1}}, 2), ValidationError);

  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    CommutatorDescriptor r;
    r.j = draw(rng, 3, 6);
    r.i = draw(rng, 1, r.j - 1);
    for (int v = 1; v < r.j; ++v) {
      if (v != r.i && draw(rng, 0, 1)) r.ks.push_back(v);
    }
    for (std::size_t t = 0; t < r.length(); ++t) {
      r.exponents.push_back(draw(rng, 1, 3) * (draw(rng, 0, 1) ? 1 : -1));
    }
    const Word got = realize_nested(r, 6);
    CHECK(oracle::letters(got) == oracle::reduce_letters(oracle::nested_letters(r)));
    for (const auto& x : exponent_sums(got)) CHECK(x == 0);
  }
}

TEST_CASE("swap identity") {
  const Word q = Word::generator(3, 1), p = Word::generator(3, 2), x = Word::generator(3, 3);
  CHECK(swap_expand(q, p, x) == commutator(q, commutator(p, x)));
  CHECK(swap_expand(q, q, x) == commutator(q, commutator(q, x)));
  CHECK(swap_expand(q, p, Word::identity(3)).is_identity());

  std::mt19937_64 rng(13);
  for (int k = 0; k < 300; ++k) {
    const Word a = random_word(rng, 3, 3), b = random_word(rng, 3, 3), c = random_word(rng, 3, 4);
    const auto lhs = oracle::commutator_letters(
        oracle::letters(a), oracle::commutator_letters(oracle::letters(b), oracle::letters(c)));
    CHECK(oracle::letters(swap_expand(a, b, c)) == oracle::reduce_letters(lhs));
  }
}

TEST_CASE("word syntax") {
  const Word x = parse_word("1^2,2^-1,1^-2,2", 2);
  CHECK(x.syllables() == std::vector<Syllable>{{1, 2}, {2, -1}, {1, -2}, {2, 1}});
  CHECK(format_word(x) == "1^2,2^-1,1^-2,2^1");
  CHECK(parse_word(format_word(x), 2) == x);
  CHECK(parse_word("", 2).is_identity());
  CHECK(parse_word(" 1 , 2^-3 ", 2).syllables() == std::vector<Syllable>{{1, 1}, {2, -3}});
  CHECK(parse_word("1^99999999999999999999999", 1).syllables()[0].exponent ==
        BigInt("99999999999999999999999"));
  CHECK_THROWS_AS(parse_word("1^", 2), ValidationError);
  CHECK_THROWS_AS(parse_word("x", 2), ValidationError);
  CHECK_THROWS_AS(parse_word("3", 2), ValidationError);
  CHECK_THROWS_AS(parse_word("1,,2", 2), ValidationError);
}
