#pragma once

#include "raag/bigint.hpp"
#include "raag/descriptor.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace raag {

struct Syllable {
  int generator = 1;
  BigInt exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced element of the free group F_m on g_1..g_m, stored
/// run-length encoded: adjacent syllables have distinct generators and no
/// exponent is zero. The empty word is the identity.
class Word {
 public:
  explicit Word(int rank = 1);

  static Word identity(int rank) { return Word(rank); }
  static Word generator(int rank, int g, const BigInt& exponent = 1);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  /// Number of letters, i.e. the sum of |exponent| over syllables.
  BigInt length() const;

  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word reduce(const std::vector<Syllable>& raw, int rank);

  int rank_;
  std::vector<Syllable> syllables_;
};

/// Unique freely reduced form of a raw syllable list. Zero exponents are
/// allowed. Throws ValidationError for generators outside 1..rank.
Word reduce(const std::vector<Syllable>& raw, int rank);

/// Throws ValidationError when the ranks differ.
Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);

Word operator*(const Word& a, const Word& b);

/// (a, b) = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

/// Component g-1 holds the total exponent of g_g. A word lies in the
/// commutator subgroup iff every entry is zero.
std::vector<BigInt> exponent_sums(const Word& w);
bool in_commutator_subgroup(const Word& w);

/// Expands the nested commutator (g_k1^n, (g_k2^n, ... (g_j^n, g_i^n)...)).
/// `rank` must be at least the largest vertex of the descriptor.
Word realize_nested(const CommutatorDescriptor& d, int rank);

/// The right-hand side of the swap identity
///   (q,(p,x)) = (q,x)(x,(p,q))(q,p)(x,p)(p,(q,x))(x,q)(p,q)(p,x)
/// built factor by factor.
Word swap_expand(const Word& q, const Word& p, const Word& x);

/// Parses `1^2,2^-1,3` (exponent defaults to 1). An empty string is the
/// identity. Throws ValidationError on malformed input.
Word parse_word(std::string_view text, int rank);
/// Inverse of parse_word; the identity prints as the empty string.
std::string format_word(const Word& w);

}  // namespace raag
