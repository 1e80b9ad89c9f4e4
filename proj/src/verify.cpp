#include "raag/verify.hpp"

#include "raag/errors.hpp"
#include "raag/generators.hpp"
#include "raag/rewriting.hpp"
#include "raag/sampling.hpp"
#include "raag/topology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace raag {

namespace {

Word letter(int g, int e, int rank = 3) { return Word::generator(rank, g, e); }

// Runs body over cases; body returns an empty string on success or a
// counterexample description. Stops at the first failure.
CheckResult run_check(const std::string& name,
                      const std::function<void(const std::function<bool(std::string)>&)>& body) {
  CheckResult r{name, true, 0, {}};
  try {
    body([&](std::string failure) {
      ++r.cases;
      if (failure.empty()) return true;
      r.passed = false;
      r.detail = std::move(failure);
      return false;
    });
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string mismatch(const std::string& what, const Word& got, const Word& want) {
  return what + ": got [" + format_word(got) + "] expected [" + format_word(want) + "]";
}

CheckResult check_swap_identity() {
  return run_check("swap identity", [](const auto& record) {
    const int exps[] = {-2, -1, 1, 2};
    std::vector<Word> letters;
    for (int g = 1; g <= 3; ++g) {
      for (int e : exps) letters.push_back(letter(g, e));
    }
    std::vector<Word> xs = letters;
    for (const auto& a : letters) {
      for (const auto& b : letters) xs.push_back(commutator(a, b));
    }
    for (const auto& q : letters) {
      for (const auto& p : letters) {
        for (const auto& x : xs) {
          const Word lhs = commutator(q, commutator(p, x));
          const Word rhs = swap_expand(q, p, x);
          std::string fail;
          if (lhs != rhs) {
            fail = mismatch("q=" + format_word(q) + " p=" + format_word(p) +
                                " x=" + format_word(x),
                            rhs, lhs);
          }
          if (!record(fail)) return;
        }
      }
    }
  });
}

CheckResult check_m3_identities() {
  return run_check("m=3 loop identities", [](const auto& record) {
    for (int c1 = -2; c1 <= 2; ++c1) {
      for (int c2 = -2; c2 <= 2; ++c2) {
        for (int c3 = -2; c3 <= 2; ++c3) {
          auto g = [](int k, int e) { return letter(k, e); };
          auto comm = [](const Word& a, const Word& b) { return commutator(a, b); };
          const Word chi1 = g(2, c2) * g(1, c1) * g(3, c3) * g(1, 1) * g(3, -c3) *
                            g(1, -c1 - 1) * g(2, -c2);
          const Word rhs1 = comm(g(2, -c2), comm(g(3, -c3), g(1, -c1))) *
                            comm(g(3, -c3), g(1, -c1)).inverse() *
                            comm(g(3, -c3), g(1, -c1 - 1)) *
                            comm(g(2, -c2), comm(g(3, -c3), g(1, -c1 - 1))).inverse();
          const Word chi2 = g(2, c2) * g(1, c1) * g(3, c3) * g(2, 1) * g(3, -c3) *
                            g(1, -c1) * g(2, -c2 - 1);
          const Word rhs2 = comm(g(2, -c2), g(1, -c1)) *
                            comm(g(1, -c1), comm(g(3, -c3), g(2, -c2))) *
                            comm(g(3, -c3), g(2, -c2)).inverse() *
                            comm(g(3, -c3), g(2, -c2 - 1)) *
                            comm(g(1, -c1), comm(g(3, -c3), g(2, -c2 - 1))).inverse() *
                            comm(g(2, -c2 - 1), g(1, -c1)).inverse();
          const std::string at = "c=(" + std::to_string(c1) + "," + std::to_string(c2) +
                                 "," + std::to_string(c3) + ")";
          if (!record(chi1 == rhs1 ? "" : mismatch("p=1 " + at, rhs1, chi1))) return;
          if (!record(chi2 == rhs2 ? "" : mismatch("p=2 " + at, rhs2, chi2))) return;
        }
      }
    }
  });
}

CheckResult check_free_counts(bool inject_fault) {
  return run_check("J = W = cycle rank", [inject_fault](const auto& record) {
    for (int m = 2; m <= 4; ++m) {
      for (int s = 1; s <= 3; ++s) {
        const BigInt j = count_J(m, s) + (inject_fault && m == 3 && s == 2 ? 1 : 0);
        const BigInt wc = count_W_closed(m, s);
        const BigInt wr = count_W_recursive(m, s);
        const BigInt cr = cycle_rank(build_grid(m, s));
        std::ostringstream fail;
        if (j != wc || wc != wr || wr != cr) {
          fail << "m=" << m << " s=" << s << ": J=" << j << " W_closed=" << wc
               << " W_recursive=" << wr << " cycle_rank=" << cr;
        }
        if (!record(fail.str())) return;
      }
    }
  });
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "m=" << g.vertex_count() << " edges=[";
  bool first = true;
  for (auto [a, b] : g.edges()) {
    out << (first ? "" : ",") << "[" << a << "," << b << "]";
    first = false;
  }
  out << "]";
  return out.str();
}

std::string compare_h1(const Graph& g, int s) {
  const SimplicialComplex K = clique_complex(g);
  const BigInt p = count_P(K, s).P;
  const HomologyResult h = h1_rank_and_torsion(build_cube_complex(K, s));
  if (h.rank == p && h.torsion.empty()) return {};
  std::ostringstream out;
  out << describe(g) << " s=" << s << ": P=" << p << " H1 rank=" << h.rank
      << " torsion=" << h.torsion.size();
  return out.str();
}

CheckResult check_p_equals_h1(std::uint64_t seed) {
  return run_check("P = rank H1, no torsion", [seed](const auto& record) {
    std::vector<Graph> graphs;
    for (int m = 1; m <= 4; ++m) {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) pairs.emplace_back(a, b);
      }
      for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          if ((mask >> k) & 1U) edges.push_back(pairs[k]);
        }
        graphs.emplace_back(m, edges);
      }
    }
    graphs.emplace_back(5, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    graphs.emplace_back(5, std::vector<std::pair<int, int>>{
                               {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}, {2, 4}});
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 10; ++k) graphs.push_back(random_graph(5, rng));
    for (const auto& g : graphs) {
      for (int s = 1; s <= 2; ++s) {
        if (!record(compare_h1(g, s))) return;
      }
    }
  });
}

CheckResult check_rewrite_f2(std::uint64_t seed) {
  return run_check("rewrite in F2'", [seed](const auto& record) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int k = 0; k < 200; ++k) {
      const Word w = random_f2_commutator_word(rng, 40);
      const F2Rewrite r = rewrite_f2_traced(w);
      std::string fail;
      if (evaluate(r.result) != w) {
        fail = mismatch("factor product", evaluate(r.result), w);
      } else if (!std::is_sorted(r.syllable_counts.rbegin(), r.syllable_counts.rend()) ||
                 std::adjacent_find(r.syllable_counts.begin(), r.syllable_counts.end()) !=
                     r.syllable_counts.end()) {
        fail = "alternation count did not strictly decrease for [" + format_word(w) + "]";
      }
      if (!record(fail)) return;
    }
  });
}

CheckResult check_express_in_basis() {
  return run_check("basis expression of loop words (m=3, s=2)", [](const auto& record) {
    const GridTree tree(3, 2);
    for (const auto& e : tree.nontree_edges()) {
      const Word w = tree.loop_word(e);
      // express_in_basis verifies internally and throws on mismatch.
      const FactorizedWord f = express_in_basis(w, 3, 2);
      if (!record(evaluate(f) == w ? "" : mismatch("loop", evaluate(f), w))) return;
    }
  });
}

CheckResult check_spanning_tree() {
  return run_check("spanning tree", [](const auto& record) {
    for (int m = 2; m <= 4; ++m) {
      for (int s = 1; s <= 3; ++s) {
        const GridGraph grid(m, s);
        const auto tree = inductive_spanning_tree(m, s);
        std::vector<std::size_t> parent(grid.vertex_count());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
          while (parent[v] != v) v = parent[v] = parent[parent[v]];
          return v;
        };
        bool acyclic = true;
        for (const auto& e : tree) {
          std::size_t a = find(e.tail), b = find(grid.head(e));
          if (a == b) acyclic = false;
          parent[a] = b;
        }
        const bool spanning = tree.size() + 1 == grid.vertex_count();
        const BigInt nontree = BigInt(grid.edge_count() - tree.size());
        std::ostringstream fail;
        if (!acyclic || !spanning || nontree != count_W_closed(m, s)) {
          fail << "m=" << m << " s=" << s << ": acyclic=" << acyclic
               << " tree edges=" << tree.size() << " non-tree=" << nontree;
        }
        if (!record(fail.str())) return;
      }
    }
  });
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerifyReport run_verify_suite(std::uint64_t seed, bool inject_fault) {
  VerifyReport r;
  r.checks.push_back(check_swap_identity());
  r.checks.push_back(check_m3_identities());
  r.checks.push_back(check_free_counts(inject_fault));
  r.checks.push_back(check_p_equals_h1(seed));
  r.checks.push_back(check_rewrite_f2(seed));
  r.checks.push_back(check_express_in_basis());
  r.checks.push_back(check_spanning_tree());
  return r;
}

}  // namespace raag
