#pragma once

#include "raag/bigint.hpp"
#include "raag/combinatorics.hpp"
#include "raag/descriptor.hpp"

#include <optional>
#include <vector>

namespace raag {

/// Cyclic vertex group: infinite when order is empty, Z/n otherwise (n >= 2).
struct VertexGroup {
  std::optional<int> order;

  static VertexGroup integers() { return VertexGroup{}; }
  static VertexGroup cyclic(int n);
  bool is_infinite() const { return !order.has_value(); }

  friend bool operator==(const VertexGroup&, const VertexGroup&) = default;
};

/// One group per vertex label 1..m, stored at index label-1.
using VertexGroupSpec = std::vector<VertexGroup>;

VertexGroupSpec all_integers(int m);
VertexGroupSpec all_cyclic(int m, int order);
/// Throws ValidationError on a length mismatch or an order below 2.
void validate_spec(const VertexGroupSpec& spec, int m);

/// Iterated commutator in a graph product; `elements` holds one nontrivial
/// element per vertex (a residue 1..n-1, or a nonzero integer for Z),
/// aligned like CommutatorDescriptor::exponents.
struct GPDescriptor {
  std::vector<int> ks;
  int j = 2;
  int i = 1;
  std::vector<BigInt> elements;

  friend bool operator==(const GPDescriptor&, const GPDescriptor&) = default;
};

CommutatorDescriptor to_commutator_descriptor(const GPDescriptor& d);
GPDescriptor to_gp_descriptor(const CommutatorDescriptor& d);

/// The kernel of G^K -> prod G_k is free iff the 1-skeleton is chordal; the
/// answer does not depend on the groups.
bool gp_is_free_kernel(const SimplicialComplex& K, const VertexGroupSpec& spec);

/// Iterated commutators with elements 1..n-1 on finite vertices and 1..s on
/// infinite ones, ordered as enumerate_descriptors.
std::vector<GPDescriptor> enumerate_gp_descriptors(const SimplicialComplex& K,
                                                   const VertexGroupSpec& spec, int s);

/// sum over |J| >= 2 of (cc(K_J) - 1) prod_{k in J} c_k, c_k = n_k - 1 or s.
BigInt gp_count(const SimplicialComplex& K, const VertexGroupSpec& spec, int s);

}  // namespace raag
