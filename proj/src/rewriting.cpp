#include "raag/rewriting.hpp"

#include "raag/errors.hpp"

#include <algorithm>
#include <string>

namespace raag {

namespace {

using Expansion = std::vector<SignedFactor>;

// Hard cap on intermediate expansion size; the swap recursion grows quickly
// with the nesting depth.
constexpr std::size_t kMaxFactors = std::size_t{1} << 22;

void check_size(const Expansion& e) {
  if (e.size() > kMaxFactors) {
    throw InternalError("basis expansion exceeded " + std::to_string(kMaxFactors) +
                        " factors");
  }
}

Expansion inverse(const Expansion& e) {
  Expansion out;
  out.reserve(e.size());
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    out.push_back(SignedFactor{it->descriptor, -it->sign});
  }
  return out;
}

void append(Expansion& dst, const Expansion& src) {
  dst.insert(dst.end(), src.begin(), src.end());
  check_size(dst);
}

Expansion single(const CommutatorDescriptor& d, int sign) {
  return Expansion{SignedFactor{d, sign}};
}

// (g_a^x, g_b^y)
Expansion letter_commutator(int a, const BigInt& x, int b, const BigInt& y) {
  if (x == 0 || y == 0 || a == b) return {};
  CommutatorDescriptor d;
  if (a > b) {
    d.j = a;
    d.i = b;
    d.exponents = {x, y};
    return single(d, +1);
  }
  d.j = b;
  d.i = a;
  d.exponents = {y, x};
  return single(d, -1);
}

// (X, Y) = X^-1 Y^-1 X Y for expansions X, Y.
Expansion expansion_commutator(const Expansion& x, const Expansion& y) {
  Expansion out = inverse(x);
  append(out, inverse(y));
  append(out, x);
  append(out, y);
  return out;
}

Expansion letter_with_expansion(int t, const BigInt& e, const Expansion& p);

CommutatorDescriptor drop_outer(const CommutatorDescriptor& d) {
  CommutatorDescriptor r;
  r.ks.assign(d.ks.begin() + 1, d.ks.end());
  r.j = d.j;
  r.i = d.i;
  r.exponents.assign(d.exponents.begin() + 1, d.exponents.end());
  return r;
}

Expansion letter_with_descriptor(int t, const BigInt& e, const CommutatorDescriptor& d) {
  if (e == 0) return {};
  if (d.vertex_set().contains(t)) {
    throw InternalError("letter g" + std::to_string(t) + " already occurs in " +
                        format_descriptor(d));
  }
  const int outer = d.ks.empty() ? d.j : d.ks.front();
  if (t < outer) {
    CommutatorDescriptor r = d;
    r.ks.insert(r.ks.begin(), t);
    r.exponents.insert(r.exponents.begin(), e);
    return single(r, +1);
  }

  // (q,(p,x)) = (q,x)(x,(p,q))(q,p)(x,p)(p,(q,x))(x,q)(p,q)(p,x)
  // with q = g_t^e and d = (p, x).
  const int p = outer;
  const BigInt& pe = d.exponents.front();
  const Expansion self = single(d, +1);  // (p, x)
  const Expansion pq = letter_commutator(p, pe, t, e);
  const Expansion qp = inverse(pq);

  Expansion qx;
  Expansion x_pq;
  if (d.ks.empty()) {
    const BigInt& ie = d.exponents.back();
    qx = letter_commutator(t, e, d.i, ie);
    x_pq = letter_with_expansion(d.i, ie, pq);
  } else {
    const CommutatorDescriptor x = drop_outer(d);
    qx = letter_with_descriptor(t, e, x);
    x_pq = expansion_commutator(single(x, +1), pq);
  }

  Expansion out = qx;
  append(out, x_pq);
  append(out, qp);
  append(out, inverse(self));                    // (x,p)
  append(out, letter_with_expansion(p, pe, qx));  // (p,(q,x))
  append(out, inverse(qx));                      // (x,q)
  append(out, pq);
  append(out, self);                             // (p,x)
  return out;
}

// (g_t^e, f1 f2 ... fn) = (a, fn) fn^-1 (a, f1...f(n-1)) fn, unrolled to
//   (a,fn) fn^-1 (a,f(n-1)) f(n-1)^-1 ... (a,f1) f1^-1 f1 f2 ... fn
Expansion letter_with_expansion(int t, const BigInt& e, const Expansion& p) {
  Expansion out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const SignedFactor& f = *it;
    Expansion head = letter_with_descriptor(t, e, f.descriptor);
    if (f.sign < 0) {
      // (a, d^-1) = d (a,d)^-1 d^-1
      out.push_back(SignedFactor{f.descriptor, +1});
      append(out, inverse(head));
      out.push_back(SignedFactor{f.descriptor, -1});
    } else {
      append(out, head);
    }
    out.push_back(SignedFactor{f.descriptor, -f.sign});
  }
  append(out, p);
  cancel_adjacent(out);
  return out;
}

// g_t^e P g_t^-e, factor by factor:
//   g^e d g^-e = d (g^-e, d)^-1,  g^e d^-1 g^-e = (g^-e, d) d^-1
Expansion conjugate_by_letter(int t, const BigInt& e, const Expansion& p) {
  if (e == 0) return p;
  Expansion out;
  for (const SignedFactor& f : p) {
    Expansion c = letter_with_descriptor(t, -e, f.descriptor);
    if (f.sign > 0) {
      out.push_back(f);
      append(out, inverse(c));
    } else {
      append(out, c);
      out.push_back(f);
    }
  }
  return out;
}

struct Letter {
  int generator;
  BigInt exponent;
};

// (g_p^e, Y1 Y2 ... Yn) for letters Y with generators distinct from p and
// from each other.
Expansion letter_with_letters(int p, const BigInt& e, const std::vector<Letter>& ys) {
  Expansion acc;
  for (const Letter& y : ys) {
    if (y.exponent == 0) continue;
    Expansion next = letter_commutator(p, e, y.generator, y.exponent);
    append(next, conjugate_by_letter(y.generator, -y.exponent, acc));
    acc = std::move(next);
  }
  return acc;
}

void check_generators(const Word& w, int m) {
  if (w.rank() > m) {
    for (const auto& syl : w.syllables()) {
      if (syl.generator > m) {
        throw ValidationError("word uses generator " + std::to_string(syl.generator) +
                              " but m = " + std::to_string(m));
      }
    }
  }
}

}  // namespace

Word evaluate(const FactorizedWord& f) {
  Word w = Word::identity(f.rank);
  for (const auto& factor : f.factors) {
    Word part = realize_nested(factor.descriptor, f.rank);
    w = w * (factor.sign > 0 ? part : part.inverse());
  }
  return w;
}

void cancel_adjacent(std::vector<SignedFactor>& factors) {
  std::vector<SignedFactor> stack;
  stack.reserve(factors.size());
  for (auto& f : factors) {
    if (!stack.empty() && stack.back().sign == -f.sign &&
        stack.back().descriptor == f.descriptor) {
      stack.pop_back();
    } else {
      stack.push_back(std::move(f));
    }
  }
  factors = std::move(stack);
}

F2Rewrite rewrite_f2_traced(const Word& w) {
  for (const auto& syl : w.syllables()) {
    if (syl.generator > 2) {
      throw ValidationError("rewrite_f2 accepts words in g1, g2 only");
    }
  }
  if (!in_commutator_subgroup(w)) {
    throw ValidationError("word is not in the commutator subgroup (nonzero exponent sums)");
  }
  F2Rewrite out;
  out.result.rank = w.rank();
  std::vector<Syllable> phi = w.syllables();
  while (true) {
    out.syllable_counts.push_back(phi.size());
    if (phi.size() <= 2) {
      if (!phi.empty()) throw InternalError("residual word in F2' is not trivial");
      break;
    }
    // phi = a^x b^y a^z psi  ->  (b^-y, a^-x)^{+-1} * b^y a^(x+z) psi
    const int a = phi[0].generator;
    const BigInt x = phi[0].exponent;
    const int b = phi[1].generator;
    const BigInt y = phi[1].exponent;
    CommutatorDescriptor d;
    d.j = 2;
    d.i = 1;
    int sign;
    if (a == 1) {
      // a^x b^y a^-x b^-y = (g2^-y, g1^-x)^-1
      d.exponents = {-y, -x};
      sign = -1;
    } else {
      // g2^x g1^y g2^-x g1^-y = (g1^-y, g2^-x)^-1 = (g2^-x, g1^-y)
      d.exponents = {-x, -y};
      sign = +1;
    }
    out.result.factors.push_back(SignedFactor{d, sign});
    std::vector<Syllable> rest{Syllable{b, y}, Syllable{a, x}};
    rest.insert(rest.end(), phi.begin() + 2, phi.end());
    phi = reduce(rest, w.rank()).syllables();
  }
  return out;
}

FactorizedWord rewrite_f2(const Word& w) { return rewrite_f2_traced(w).result; }

std::vector<Point> lift_path(const Word& w, int m, int s) {
  if (m < 1 || s < 1) throw ValidationError("lift requires m >= 1 and s >= 1");
  check_generators(w, m);
  Point p(static_cast<std::size_t>(m), 0);
  std::vector<Point> path{p};
  std::size_t letters = 0;
  for (std::size_t k = 0; k < w.syllables().size(); ++k) {
    const Syllable& syl = w.syllables()[k];
    const int step = syl.exponent > 0 ? 1 : -1;
    const BigInt count = abs(syl.exponent);
    for (BigInt t = 0; t < count; ++t) {
      int& coord = p[syl.generator - 1];
      coord += step;
      ++letters;
      if (coord < 0 || coord > s) {
        throw BoundError("path leaves the cube [0," + std::to_string(s) + "]^" +
                             std::to_string(m) + " after the first " +
                             std::to_string(letters) + " letters (syllable " +
                             std::to_string(k + 1) + ", generator " +
                             std::to_string(syl.generator) + " reaches " +
                             std::to_string(coord) + ")",
                         letters);
      }
      path.push_back(p);
    }
  }
  return path;
}

std::vector<LoopFactor> decompose_loop(const Word& w, const GridTree& tree) {
  const GridGraph& grid = tree.grid();
  if (!in_commutator_subgroup(w)) {
    throw ValidationError("word is not in the commutator subgroup (lift is not closed)");
  }
  std::vector<Point> path = lift_path(w, grid.m(), grid.s());
  std::vector<LoopFactor> out;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const Point& a = path[k - 1];
    const Point& b = path[k];
    int direction = 0;
    int sign = 0;
    for (int d = 0; d < grid.m(); ++d) {
      if (a[d] != b[d]) {
        direction = d + 1;
        sign = b[d] > a[d] ? 1 : -1;
      }
    }
    GridEdge e{grid.index(sign > 0 ? a : b), direction};
    if (!tree.is_tree_edge(e)) out.push_back(LoopFactor{e, sign, tree.loop_word(e)});
  }
  return out;
}

std::vector<LoopFactor> decompose_loop(const Word& w, int m, int s) {
  check_generators(w, m);
  return decompose_loop(w, GridTree(m, s));
}

std::vector<SignedFactor> commutator_with_letter(int t, const BigInt& e,
                                                 const CommutatorDescriptor& d) {
  validate_structure(d);
  if (t < 1) throw ValidationError("generator labels start at 1");
  if (d.vertex_set().contains(t)) {
    throw ValidationError("letter must not occur in the descriptor");
  }
  return letter_with_descriptor(t, e, d);
}

std::vector<SignedFactor> express_loop(const GridTree& tree, const GridEdge& e) {
  if (tree.is_tree_edge(e)) throw ValidationError("edge belongs to the spanning tree");
  const GridGraph& grid = tree.grid();
  const int m = grid.m();
  const int p = e.direction;
  const Point c = grid.point(e.tail);
  auto coord = [&](int g) { return BigInt(c[g - 1]); };

  // Tree path to c reads g_{m-1}^c g_{m-2}^c ... g_1^c g_m^c. Split it around
  // g_p into A (generators above p) and B (below p, then m):
  //   loop = A g_p^c B g_p B^-1 g_p^-(c+1) A^-1
  //        = A (g_p^-c, B^-1) (g_p^-(c+1), B^-1)^-1 A^-1
  std::vector<Letter> b_inverse{Letter{m, -coord(m)}};
  for (int g = 1; g < p; ++g) b_inverse.push_back(Letter{g, -coord(g)});

  Expansion out = letter_with_letters(p, -coord(p), b_inverse);
  append(out, inverse(letter_with_letters(p, -coord(p) - 1, b_inverse)));
  for (int g = p + 1; g <= m - 1; ++g) out = conjugate_by_letter(g, coord(g), out);
  cancel_adjacent(out);
  return out;
}

FactorizedWord express_in_basis(const Word& w, int m, int s) {
  check_generators(w, m);
  const Word target = w.rank() == m ? w : reduce(w.syllables(), m);
  if (m == 1) {
    if (!target.is_identity()) {
      throw ValidationError("word is not in the commutator subgroup");
    }
    return FactorizedWord{m, {}};
  }
  GridTree tree(m, s);
  FactorizedWord result{m, {}};
  for (const LoopFactor& lf : decompose_loop(target, tree)) {
    Expansion part = express_loop(tree, lf.edge);
    append(result.factors, lf.sign > 0 ? part : inverse(part));
  }
  cancel_adjacent(result.factors);
  for (const auto& f : result.factors) validate_structure(f.descriptor);
  if (evaluate(result) != target) {
    throw InternalError("basis expression does not reduce to the input word " +
                        format_word(target));
  }
  return result;
}

}  // namespace raag
