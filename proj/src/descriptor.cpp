#include "raag/descriptor.hpp"

#include "raag/errors.hpp"

#include <algorithm>
#include <sstream>

namespace raag {

std::vector<int> CommutatorDescriptor::vertex_tuple() const {
  std::vector<int> t = ks;
  t.push_back(j);
  t.push_back(i);
  return t;
}

VertexSet CommutatorDescriptor::vertex_set() const {
  return VertexSet::from_labels(vertex_tuple());
}

const BigInt& CommutatorDescriptor::exponent_of(int vertex) const {
  auto t = vertex_tuple();
  auto it = std::find(t.begin(), t.end(), vertex);
  if (it == t.end() || exponents.size() != t.size()) {
    throw ValidationError("vertex " + std::to_string(vertex) +
                          " is not part of the descriptor");
  }
  return exponents[static_cast<std::size_t>(it - t.begin())];
}

bool descriptor_less(const CommutatorDescriptor& a, const CommutatorDescriptor& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  auto ta = a.vertex_tuple();
  auto tb = b.vertex_tuple();
  if (ta != tb) return ta < tb;
  return a.exponents < b.exponents;
}

void validate_structure(const CommutatorDescriptor& d) {
  auto fail = [&](const std::string& why) {
    throw ValidationError("invalid descriptor " + format_descriptor(d) + ": " + why);
  };
  if (d.exponents.size() != d.length()) fail("exponent count mismatch");
  if (d.i < 1 || d.j < 1) fail("vertex labels start at 1");
  if (!(d.i < d.j)) fail("requires i < j");
  for (std::size_t t = 0; t < d.ks.size(); ++t) {
    if (d.ks[t] < 1) fail("vertex labels start at 1");
    if (t > 0 && !(d.ks[t - 1] < d.ks[t])) fail("ks must be strictly increasing");
    if (!(d.ks[t] < d.j)) fail("every k must be smaller than j");
    if (d.ks[t] == d.i) fail("k equals i");
  }
  for (const BigInt& e : d.exponents) {
    if (e == 0) fail("zero exponent");
  }
}

bool is_structurally_valid(const CommutatorDescriptor& d) {
  try {
    validate_structure(d);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

bool satisfies_component_condition(const CommutatorDescriptor& d, const Graph& g) {
  VertexSet vs = d.vertex_set();
  if (vs.max() > g.vertex_count()) return false;
  for (VertexSet comp : components(g, vs)) {
    if (comp.contains(d.i)) return !comp.contains(d.j) && comp.min() == d.i;
  }
  return false;
}

std::string format_descriptor(const CommutatorDescriptor& d) {
  std::ostringstream out;
  auto letter = [&](int v, std::size_t slot) {
    out << 'g' << v << '^';
    if (slot < d.exponents.size()) {
      out << d.exponents[slot];
    } else {
      out << '?';
    }
  };
  for (std::size_t t = 0; t < d.ks.size(); ++t) {
    out << '(';
    letter(d.ks[t], t);
    out << ',';
  }
  out << '(';
  letter(d.j, d.ks.size());
  out << ',';
  letter(d.i, d.ks.size() + 1);
  out << ')';
  for (std::size_t t = 0; t < d.ks.size(); ++t) out << ')';
  return out.str();
}

}  // namespace raag
