#pragma once

#include "raag/bigint.hpp"
#include "raag/combinatorics.hpp"
#include "raag/descriptor.hpp"

#include <optional>
#include <vector>

namespace raag {

/// Vertex data (ks, j, i) of every admissible commutator on the vertices
/// `within` for the flag complex with 1-skeleton g, ordered by length then
/// vertex tuple. Exponents are left empty.
std::vector<CommutatorDescriptor> enumerate_vertex_tuples(const Graph& g,
                                                          VertexSet within);

/// Minimal generating set of the commutator subgroup restricted to exponents
/// 1..s, in the total order of descriptor_less. The complex is replaced by
/// the clique complex of its 1-skeleton.
std::vector<CommutatorDescriptor> enumerate_descriptors(const SimplicialComplex& K,
                                                        int s);

/// Walks the full generating set (exponents in Z \ {0}) in levels: level s
/// holds the descriptors whose largest |exponent| equals s.
class DescriptorStream {
 public:
  explicit DescriptorStream(const SimplicialComplex& K);

  int next_level() const { return level_ + 1; }
  /// Descriptors new at the next level, in descriptor_less order.
  std::vector<CommutatorDescriptor> next();

 private:
  std::vector<CommutatorDescriptor> tuples_;
  int level_ = 0;
};

struct SubsetCount {
  VertexSet subset;
  int components = 0;
  BigInt contribution;  // (cc - 1) * s^|J|

  friend bool operator==(const SubsetCount&, const SubsetCount&) = default;
};

struct CountReport {
  int m = 0;
  int s = 1;
  /// Free-group counts for rank m; empty when m < 2.
  std::optional<BigInt> J;
  std::optional<BigInt> W_closed;
  std::optional<BigInt> W_recursive;
  BigInt P;
  /// Every subset with |J| >= 2, ordered by size then bitmask.
  std::vector<SubsetCount> table;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// P = sum over |J| >= 2 of (cc(K_J) - 1) s^|J|, with the subset table.
CountReport count_P(const SimplicialComplex& K, int s);

/// Number of admissible commutators per subset, summed: the P value alone.
BigInt count_P_value(const Graph& g, int s);

BigInt binomial(int n, int k);

/// sum_{i=2}^{m} C(m,i) (i-1) s^i. Requires m >= 2, s >= 1.
BigInt count_J(int m, int s);
/// s^2 (s+1)^{m-2} + (m-2)(s+1)^{m-1} s - s sum_{i=0}^{m-3} (s+1)^i
BigInt count_W_closed(int m, int s);
/// W_2 = s^2, W_m = W_{m-1}(s+1) + (s+1)^{m-1} s - s
BigInt count_W_recursive(int m, int s);

/// (k-1) C(m,k). Requires 2 <= k <= m.
BigInt coefficient_of(int m, int k);

/// Integer polynomial in s, coefficient of s^d at index d.
using IntPolynomial = std::vector<BigInt>;

IntPolynomial j_polynomial(int m);
/// The closed form for W expanded symbolically.
IntPolynomial w_closed_polynomial(int m);
BigInt evaluate(const IntPolynomial& p, const BigInt& s);

}  // namespace raag
