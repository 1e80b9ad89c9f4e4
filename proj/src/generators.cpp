#include "raag/generators.hpp"

#include "raag/errors.hpp"

#include <algorithm>

namespace raag {

namespace {

void check_bound(int s) {
  if (s < 1) throw ValidationError("bound s must be at least 1");
}

void check_free_rank(int m) {
  if (m < 2) throw ValidationError("free-group counts require m >= 2");
}

BigInt power(const BigInt& base, int e) {
  BigInt r = 1;
  for (int t = 0; t < e; ++t) r *= base;
  return r;
}

// Calls fn(exponents) for every tuple in values^n, lexicographically.
template <typename Fn>
void for_each_tuple(const std::vector<BigInt>& values, std::size_t n, Fn&& fn) {
  if (values.empty()) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<BigInt> tuple(n, values.front());
  while (true) {
    for (std::size_t t = 0; t < n; ++t) tuple[t] = values[idx[t]];
    fn(tuple);
    std::size_t t = n;
    while (t > 0 && idx[t - 1] + 1 == values.size()) {
      idx[t - 1] = 0;
      --t;
    }
    if (t == 0) return;
    ++idx[t - 1];
  }
}

IntPolynomial poly_add(IntPolynomial a, const IntPolynomial& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t d = 0; d < b.size(); ++d) a[d] += b[d];
  return a;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) r[x + y] += a[x] * b[y];
  }
  return r;
}

IntPolynomial poly_pow(const IntPolynomial& a, int e) {
  IntPolynomial r{BigInt(1)};
  for (int t = 0; t < e; ++t) r = poly_mul(r, a);
  return r;
}

IntPolynomial poly_scale(IntPolynomial a, const BigInt& c) {
  for (auto& x : a) x *= c;
  return a;
}

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<CommutatorDescriptor> enumerate_vertex_tuples(const Graph& g,
                                                          VertexSet within) {
  std::vector<CommutatorDescriptor> out;
  const std::uint64_t full = within.bits();
  for (std::uint64_t sub = full & (~full + 1); sub != 0;
       sub = ((sub | ~full) + 1) & full) {
    VertexSet S = VertexSet::from_bits(sub);
    if (S.size() < 2) continue;
    const int j = S.max();
    for (VertexSet comp : components(g, S)) {
      if (comp.contains(j)) continue;
      CommutatorDescriptor d;
      d.j = j;
      d.i = comp.min();
      VertexSet rest = S;
      rest.erase(j);
      rest.erase(d.i);
      d.ks = rest.labels();
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(), descriptor_less);
  return out;
}

std::vector<CommutatorDescriptor> enumerate_descriptors(const SimplicialComplex& K,
                                                        int s) {
  check_bound(s);
  std::vector<BigInt> range;
  for (int e = 1; e <= s; ++e) range.emplace_back(e);
  std::vector<CommutatorDescriptor> out;
  for (const auto& shape : enumerate_vertex_tuples(K.one_skeleton(), K.vertices())) {
    for_each_tuple(range, shape.length(), [&](const std::vector<BigInt>& ex) {
      CommutatorDescriptor d = shape;
      d.exponents = ex;
      out.push_back(std::move(d));
    });
  }
  return out;
}

DescriptorStream::DescriptorStream(const SimplicialComplex& K)
    : tuples_(enumerate_vertex_tuples(K.one_skeleton(), K.vertices())) {}

std::vector<CommutatorDescriptor> DescriptorStream::next() {
  const int s = ++level_;
  std::vector<BigInt> range;
  for (int e = -s; e <= s; ++e) {
    if (e != 0) range.emplace_back(e);
  }
  std::vector<CommutatorDescriptor> out;
  for (const auto& shape : tuples_) {
    for_each_tuple(range, shape.length(), [&](const std::vector<BigInt>& ex) {
      bool reaches = std::any_of(ex.begin(), ex.end(),
                                 [s](const BigInt& e) { return abs(e) == s; });
      if (!reaches) return;
      CommutatorDescriptor d = shape;
      d.exponents = ex;
      out.push_back(std::move(d));
    });
  }
  return out;
}

CountReport count_P(const SimplicialComplex& K, int s) {
  check_bound(s);
  CountReport report;
  report.m = K.ambient_size();
  report.s = s;
  if (report.m >= 2) {
    report.J = count_J(report.m, s);
    report.W_closed = count_W_closed(report.m, s);
    report.W_recursive = count_W_recursive(report.m, s);
  }
  const Graph g = K.one_skeleton();
  const VertexSet V = K.vertices();
  std::vector<BigInt> powers(static_cast<std::size_t>(V.size()) + 1);
  powers[0] = 1;
  for (std::size_t d = 1; d < powers.size(); ++d) powers[d] = powers[d - 1] * s;
  report.P = 0;
  const std::uint64_t full = V.bits();
  // Submasks of the vertex set, increasing.
  for (std::uint64_t sub = full & (~full + 1); sub != 0;
       sub = ((sub | ~full) + 1) & full) {
    VertexSet J = VertexSet::from_bits(sub);
    if (J.size() < 2) continue;
    SubsetCount row;
    row.subset = J;
    row.components = component_count(g, J);
    row.contribution = BigInt(row.components - 1) * powers[J.size()];
    report.P += row.contribution;
    report.table.push_back(std::move(row));
  }
  std::stable_sort(report.table.begin(), report.table.end(),
                   [](const SubsetCount& a, const SubsetCount& b) {
                     return a.subset.size() != b.subset.size()
                                ? a.subset.size() < b.subset.size()
                                : a.subset < b.subset;
                   });
  return report;
}

BigInt count_P_value(const Graph& g, int s) {
  check_bound(s);
  BigInt total = 0;
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t sub = full & (~full + 1); sub != 0;
       sub = ((sub | ~full) + 1) & full) {
    VertexSet J = VertexSet::from_bits(sub);
    if (J.size() < 2) continue;
    int cc = component_count(g, J);
    if (cc > 1) total += BigInt(cc - 1) * power(BigInt(s), J.size());
  }
  return total;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;
  }
  return r;
}

BigInt count_J(int m, int s) {
  check_free_rank(m);
  check_bound(s);
  BigInt total = 0;
  for (int i = 2; i <= m; ++i) {
    total += binomial(m, i) * (i - 1) * power(BigInt(s), i);
  }
  return total;
}

BigInt count_W_closed(int m, int s) {
  check_free_rank(m);
  check_bound(s);
  const BigInt s1 = s + 1;
  BigInt tail = 0;
  for (int i = 0; i <= m - 3; ++i) tail += power(s1, i);
  return BigInt(s) * s * power(s1, m - 2) + BigInt(m - 2) * power(s1, m - 1) * s -
         BigInt(s) * tail;
}

BigInt count_W_recursive(int m, int s) {
  check_free_rank(m);
  check_bound(s);
  BigInt w = BigInt(s) * s;
  for (int k = 3; k <= m; ++k) {
    w = w * (s + 1) + power(BigInt(s + 1), k - 1) * s - s;
  }
  return w;
}

BigInt coefficient_of(int m, int k) {
  if (k < 2 || k > m) {
    throw ValidationError("coefficient index k must satisfy 2 <= k <= m");
  }
  return BigInt(k - 1) * binomial(m, k);
}

IntPolynomial j_polynomial(int m) {
  check_free_rank(m);
  IntPolynomial p(static_cast<std::size_t>(m) + 1, BigInt(0));
  for (int i = 2; i <= m; ++i) p[i] = binomial(m, i) * (i - 1);
  trim(p);
  return p;
}

IntPolynomial w_closed_polynomial(int m) {
  check_free_rank(m);
  const IntPolynomial s{BigInt(0), BigInt(1)};
  const IntPolynomial s_plus_1{BigInt(1), BigInt(1)};
  IntPolynomial p = poly_mul(poly_mul(s, s), poly_pow(s_plus_1, m - 2));
  p = poly_add(p, poly_scale(poly_mul(poly_pow(s_plus_1, m - 1), s), BigInt(m - 2)));
  IntPolynomial tail;
  for (int i = 0; i <= m - 3; ++i) tail = poly_add(tail, poly_pow(s_plus_1, i));
  p = poly_add(p, poly_scale(poly_mul(s, tail), BigInt(-1)));
  trim(p);
  return p;
}

BigInt evaluate(const IntPolynomial& p, const BigInt& s) {
  BigInt r = 0;
  for (std::size_t d = p.size(); d-- > 0;) r = r * s + p[d];
  return r;
}

}  // namespace raag
