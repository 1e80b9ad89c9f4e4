#include "raag/freegroup.hpp"

#include "raag/errors.hpp"

#include <cctype>
#include <sstream>

namespace raag {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw ValidationError("free group rank must be positive");
}

void check_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw ValidationError("alphabet mismatch: rank " + std::to_string(a.rank()) +
                          " vs " + std::to_string(b.rank()));
  }
}

// Appends a syllable onto an already reduced stack, merging and cancelling.
void push_reduced(std::vector<Syllable>& stack, const Syllable& s) {
  if (s.exponent == 0) return;
  if (!stack.empty() && stack.back().generator == s.generator) {
    stack.back().exponent += s.exponent;
    if (stack.back().exponent == 0) stack.pop_back();
    return;
  }
  stack.push_back(s);
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::generator(int rank, int g, const BigInt& exponent) {
  return reduce({Syllable{g, exponent}}, rank);
}

BigInt Word::length() const {
  BigInt n = 0;
  for (const auto& s : syllables_) n += abs(s.exponent);
  return n;
}

Word Word::inverse() const {
  Word w(rank_);
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back(Syllable{it->generator, -it->exponent});
  }
  return w;
}

Word reduce(const std::vector<Syllable>& raw, int rank) {
  Word w(rank);
  for (const auto& s : raw) {
    if (s.generator < 1 || s.generator > rank) {
      throw ValidationError("generator " + std::to_string(s.generator) +
                            " outside 1.." + std::to_string(rank));
    }
    push_reduced(w.syllables_, s);
  }
  return w;
}

Word multiply(const Word& a, const Word& b) {
  check_same_rank(a, b);
  std::vector<Syllable> raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return reduce(raw, a.rank());
}

Word invert(const Word& a) { return a.inverse(); }

Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::vector<BigInt> exponent_sums(const Word& w) {
  std::vector<BigInt> sums(static_cast<std::size_t>(w.rank()), BigInt(0));
  for (const auto& s : w.syllables()) sums[s.generator - 1] += s.exponent;
  return sums;
}

bool in_commutator_subgroup(const Word& w) {
  for (const auto& e : exponent_sums(w)) {
    if (e != 0) return false;
  }
  return true;
}

Word realize_nested(const CommutatorDescriptor& d, int rank) {
  validate_structure(d);
  const std::size_t n = d.ks.size();
  Word w = commutator(Word::generator(rank, d.j, d.exponents[n]),
                      Word::generator(rank, d.i, d.exponents[n + 1]));
  for (std::size_t t = n; t-- > 0;) {
    w = commutator(Word::generator(rank, d.ks[t], d.exponents[t]), w);
  }
  return w;
}

Word swap_expand(const Word& q, const Word& p, const Word& x) {
  return commutator(q, x) * commutator(x, commutator(p, q)) * commutator(q, p) *
         commutator(x, p) * commutator(p, commutator(q, x)) * commutator(x, q) *
         commutator(p, q) * commutator(p, x);
}

Word parse_word(std::string_view text, int rank) {
  std::vector<Syllable> raw;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw ValidationError("malformed word at offset " + std::to_string(pos) + ": " + why);
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected an integer");
    return std::string(text.substr(start, pos - start));
  };
  skip_ws();
  if (pos == text.size()) return Word(rank);
  while (true) {
    skip_ws();
    std::string g = read_int(false);
    if (g.size() > 6) fail("generator index too large");
    Syllable s{std::stoi(g), BigInt(1)};
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      std::string e = read_int(true);
      if (e.front() == '+') e.erase(0, 1);
      s.exponent = BigInt(e);
    }
    raw.push_back(s);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return reduce(raw, rank);
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << ',';
    first = false;
    out << s.generator << '^' << s.exponent;
  }
  return out.str();
}

}  // namespace raag
