#pragma once

#include "raag/bigint.hpp"
#include "raag/combinatorics.hpp"

#include <string>
#include <vector>

namespace raag {

/// Index of one nested iterated commutator
///   (g_k1^a1, (g_k2^a2, ... (g_j^b, g_i^c)...))
/// with k1 < k2 < ... < j, i < j, and i not among the k's.
/// `exponents` is aligned with ks, then j, then i.
struct CommutatorDescriptor {
  std::vector<int> ks;
  int j = 2;
  int i = 1;
  std::vector<BigInt> exponents;

  /// Number of letters, |ks| + 2.
  std::size_t length() const { return ks.size() + 2; }
  /// (k1, ..., j, i)
  std::vector<int> vertex_tuple() const;
  VertexSet vertex_set() const;
  const BigInt& exponent_of(int vertex) const;

  friend bool operator==(const CommutatorDescriptor&,
                         const CommutatorDescriptor&) = default;
};

/// Total order: length, then vertex tuple, then exponent tuple.
bool descriptor_less(const CommutatorDescriptor& a, const CommutatorDescriptor& b);

/// Checks ordering, distinctness, and that every exponent is nonzero.
/// Throws ValidationError describing the first violation.
void validate_structure(const CommutatorDescriptor& d);
bool is_structurally_valid(const CommutatorDescriptor& d);

/// Checks the component condition against a graph: i is the smallest vertex
/// of its component in the induced subgraph on the descriptor's vertices,
/// and that component does not contain j.
bool satisfies_component_condition(const CommutatorDescriptor& d, const Graph& g);

/// Commutator notation, e.g. (g4^1,(g5^1,g2^1)).
std::string format_descriptor(const CommutatorDescriptor& d);

}  // namespace raag
