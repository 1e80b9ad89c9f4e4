#include "raag/graphproduct.hpp"

#include "raag/errors.hpp"
#include "raag/generators.hpp"

#include <string>

namespace raag {

namespace {

void check_bound(int s) {
  if (s < 1) throw ValidationError("bound s must be at least 1, got " + std::to_string(s));
}

BigInt choices(const VertexGroup& g, int s) {
  return g.is_infinite() ? BigInt(s) : BigInt(*g.order - 1);
}

}  // namespace

VertexGroup VertexGroup::cyclic(int n) {
  if (n < 2) throw ValidationError("cyclic vertex group needs order >= 2, got " + std::to_string(n));
  return VertexGroup{n};
}

VertexGroupSpec all_integers(int m) { return VertexGroupSpec(static_cast<std::size_t>(m)); }

VertexGroupSpec all_cyclic(int m, int order) {
  return VertexGroupSpec(static_cast<std::size_t>(m), VertexGroup::cyclic(order));
}

void validate_spec(const VertexGroupSpec& spec, int m) {
  if (spec.size() != static_cast<std::size_t>(m)) {
    throw ValidationError("group spec lists " + std::to_string(spec.size()) +
                          " groups for " + std::to_string(m) + " vertices");
  }
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (spec[k].order && *spec[k].order < 2) {
      throw ValidationError("vertex " + std::to_string(k + 1) + " has order " +
                            std::to_string(*spec[k].order) + "; orders must be >= 2");
    }
  }
}

CommutatorDescriptor to_commutator_descriptor(const GPDescriptor& d) {
  return CommutatorDescriptor{d.ks, d.j, d.i, d.elements};
}

GPDescriptor to_gp_descriptor(const CommutatorDescriptor& d) {
  return GPDescriptor{d.ks, d.j, d.i, d.exponents};
}

bool gp_is_free_kernel(const SimplicialComplex& K, const VertexGroupSpec& spec) {
  validate_spec(spec, K.ambient_size());
  return is_chordal(K.one_skeleton());
}

std::vector<GPDescriptor> enumerate_gp_descriptors(const SimplicialComplex& K,
                                                   const VertexGroupSpec& spec, int s) {
  check_bound(s);
  validate_spec(spec, K.ambient_size());
  std::vector<GPDescriptor> out;
  for (const auto& shape : enumerate_vertex_tuples(K.one_skeleton(), K.vertices())) {
    const std::vector<int> verts = shape.vertex_tuple();
    std::vector<BigInt> limit;
    for (int v : verts) limit.push_back(choices(spec[v - 1], s));
    // Odometer over 1..limit[t], last position fastest.
    std::vector<BigInt> e(verts.size(), BigInt(1));
    while (true) {
      out.push_back(GPDescriptor{shape.ks, shape.j, shape.i, e});
      std::size_t t = e.size();
      while (t > 0 && e[t - 1] == limit[t - 1]) {
        e[t - 1] = 1;
        --t;
      }
      if (t == 0) break;
      ++e[t - 1];
    }
  }
  return out;
}

BigInt gp_count(const SimplicialComplex& K, const VertexGroupSpec& spec, int s) {
  check_bound(s);
  validate_spec(spec, K.ambient_size());
  const Graph g = K.one_skeleton();
  BigInt total = 0;
  const std::uint64_t full = K.vertices().bits();
  for (std::uint64_t sub = full & (~full + 1); sub != 0; sub = ((sub | ~full) + 1) & full) {
    VertexSet J = VertexSet::from_bits(sub);
    if (J.size() < 2) continue;
    const int cc = component_count(g, J);
    if (cc < 2) continue;
    BigInt term = cc - 1;
    for (int v : J.labels()) term *= choices(spec[v - 1], s);
    total += term;
  }
  return total;
}

}  // namespace raag
