#pragma once

#include "raag/descriptor.hpp"
#include "raag/freegroup.hpp"
#include "raag/topology.hpp"

#include <cstddef>
#include <vector>

namespace raag {

struct SignedFactor {
  CommutatorDescriptor descriptor;
  int sign = 1;  // +1 or -1

  friend bool operator==(const SignedFactor&, const SignedFactor&) = default;
};

/// Ordered product of descriptor commutators (inverted when sign = -1).
struct FactorizedWord {
  int rank = 2;
  std::vector<SignedFactor> factors;

  friend bool operator==(const FactorizedWord&, const FactorizedWord&) = default;
};

/// Multiplies the realized factors in order.
Word evaluate(const FactorizedWord& f);

/// Drops adjacent pairs d^e d^-e.
void cancel_adjacent(std::vector<SignedFactor>& factors);

struct F2Rewrite {
  FactorizedWord result;
  /// Syllable count of the remaining word before each split and at the end.
  std::vector<std::size_t> syllable_counts;
};

/// Writes w in the commutator subgroup of F(g1, g2) as a product of
/// commutators (g2^a, g1^b)^{+-1}, splitting one off the left each round.
/// Throws ValidationError when w uses other generators or is not in F2'.
F2Rewrite rewrite_f2_traced(const Word& w);
FactorizedWord rewrite_f2(const Word& w);

/// Vertex sequence of the lift of w starting at the origin, one lattice
/// point per letter (g_i steps +e_i). Throws BoundError when the path
/// leaves {0..s}^m.
std::vector<Point> lift_path(const Word& w, int m, int s);

struct LoopFactor {
  GridEdge edge;
  int sign = 1;  // +1 when traversed toward increasing coordinate
  Word loop;
};

/// Non-tree edges crossed by the lifted loop, in order; the product of the
/// loop words raised to their signs reduces to w.
std::vector<LoopFactor> decompose_loop(const Word& w, const GridTree& tree);
std::vector<LoopFactor> decompose_loop(const Word& w, int m, int s);

/// (g_t^e, d) as a product of free-basis descriptors. t must not be a vertex
/// of d. Uses the swap identity to move g_t inward when t is not smaller
/// than the outer letters of d.
std::vector<SignedFactor> commutator_with_letter(int t, const BigInt& e,
                                                 const CommutatorDescriptor& d);

/// Loop word of a non-tree edge as a product of free-basis descriptors.
std::vector<SignedFactor> express_loop(const GridTree& tree, const GridEdge& e);

/// Writes w in the commutator subgroup of F_m as a signed product of
/// free-basis descriptors. The result is checked by free reduction; a
/// mismatch throws InternalError.
FactorizedWord express_in_basis(const Word& w, int m, int s);

}  // namespace raag
