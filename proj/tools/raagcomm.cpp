// raagcomm: command-line front end for the commutator-subgroup toolkit.

#include "raag/combinatorics.hpp"
#include "raag/errors.hpp"
#include "raag/generators.hpp"
#include "raag/graphproduct.hpp"
#include "raag/io.hpp"
#include "raag/rewriting.hpp"
#include "raag/sampling.hpp"
#include "raag/topology.hpp"
#include "raag/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace raag;

enum class Format { text, json };

struct RunConfig {
  std::string input;
  std::string groups;
  int bound = 1;
  Format format = Format::text;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t cell_cap = 2'000'000;
  std::size_t table_cap = 64;
  std::string dump_dir;
  std::string word;
  int rank = 0;
  std::string mode = "basis";
  bool verbose = false;
  bool inject_fault = false;
};

std::string set_text(VertexSet v) {
  std::string out = "{";
  bool first = true;
  for (int x : v.labels()) {
    out += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return out + "}";
}

SimplicialComplex load_complex(const RunConfig& cfg) {
  if (cfg.input.empty()) throw ValidationError("--input is required");
  return complex_from_json(read_json_file(cfg.input));
}

std::optional<VertexGroupSpec> load_groups(const RunConfig& cfg) {
  if (cfg.groups.empty()) return std::nullopt;
  return group_spec_from_json(read_json_file(cfg.groups));
}

void check_bound(int s) {
  if (s < 1) throw ValidationError("--bound must be at least 1");
}

int cmd_analyze(const RunConfig& cfg) {
  const SimplicialComplex K = load_complex(cfg);
  check_bound(cfg.bound);
  const FlagCheck flag = is_flag(K);
  const Graph g = K.one_skeleton();
  const bool chordal = is_chordal(g);
  const CountReport report = count_P(K, cfg.bound);
  const bool none = std::all_of(report.table.begin(), report.table.end(),
                                [](const SubsetCount& c) { return c.components < 2; });

  if (cfg.format == Format::json) {
    Json table = Json::array();
    for (std::size_t k = 0; k < report.table.size() && k < cfg.table_cap; ++k) {
      table.push_back(Json{{"subset", report.table[k].subset.labels()},
                           {"components", report.table[k].components}});
    }
    Json out{{"m", K.ambient_size()},
             {"flag", flag.flag},
             {"missing_face", flag.witness ? Json(flag.witness->labels()) : Json(nullptr)},
             {"chordal", chordal},
             {"commutator_subgroup_free", chordal},
             {"s", cfg.bound},
             {"generators", none ? Json(0) : bigint_to_json(report.P)},
             {"generators_vanish_for_all_s", none},
             {"table", table},
             {"table_truncated", report.table.size() > cfg.table_cap}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "vertices: " << K.ambient_size() << '\n';
  std::cout << "edges: " << g.edge_count() << '\n';
  std::cout << "flag: " << (flag.flag ? "true" : "false");
  if (flag.witness) {
    std::cout << " (missing face " << set_text(*flag.witness)
              << "; the clique complex is used)";
  }
  std::cout << '\n';
  std::cout << "chordal: " << (chordal ? "true" : "false") << '\n';
  std::cout << "commutator subgroup free: " << (chordal ? "true" : "false") << '\n';
  if (none) {
    std::cout << "generators at any s: 0\n";
  } else {
    std::cout << "generators at s=" << cfg.bound << ": " << report.P << '\n';
  }
  std::cout << "subset components\n";
  for (std::size_t k = 0; k < report.table.size() && k < cfg.table_cap; ++k) {
    std::cout << set_text(report.table[k].subset) << ' ' << report.table[k].components
              << '\n';
  }
  if (report.table.size() > cfg.table_cap) {
    std::cout << "... " << report.table.size() - cfg.table_cap << " more subsets\n";
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
  const SimplicialComplex K = load_complex(cfg);
  check_bound(cfg.bound);
  if (auto spec = load_groups(cfg)) {
    const auto list = enumerate_gp_descriptors(K, *spec, cfg.bound);
    if (cfg.format == Format::json) {
      Json out = Json::array();
      for (const auto& d : list) out.push_back(to_json(d));
      std::cout << out.dump(2) << '\n';
    } else {
      for (const auto& d : list) {
        std::cout << format_descriptor(to_commutator_descriptor(d)) << '\n';
      }
    }
    return 0;
  }
  const auto list = enumerate_descriptors(K, cfg.bound);
  if (cfg.format == Format::json) {
    Json out = Json::array();
    for (const auto& d : list) out.push_back(to_json(d));
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& d : list) std::cout << format_descriptor(d) << '\n';
  }
  return 0;
}

int cmd_count(const RunConfig& cfg) {
  const SimplicialComplex K = load_complex(cfg);
  check_bound(cfg.bound);
  if (auto spec = load_groups(cfg)) {
    const BigInt n = gp_count(K, *spec, cfg.bound);
    if (cfg.format == Format::json) {
      std::cout << Json{{"m", K.ambient_size()}, {"s", cfg.bound}, {"count", bigint_to_json(n)}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "count: " << n << '\n';
    }
    return 0;
  }
  const CountReport r = count_P(K, cfg.bound);
  if (cfg.format == Format::json) {
    std::cout << to_json(r).dump(2) << '\n';
    return 0;
  }
  auto opt = [](const std::optional<BigInt>& v) { return v ? to_string(*v) : "n/a"; };
  std::cout << "m: " << r.m << '\n'
            << "s: " << r.s << '\n'
            << "J: " << opt(r.J) << '\n'
            << "W_closed: " << opt(r.W_closed) << '\n'
            << "W_recursive: " << opt(r.W_recursive) << '\n'
            << "P: " << r.P << '\n';
  std::cout << "subset components contribution\n";
  for (const auto& row : r.table) {
    if (row.contribution == 0) continue;
    std::cout << set_text(row.subset) << ' ' << row.components << ' ' << row.contribution
              << '\n';
  }
  return 0;
}

int cmd_homology(const RunConfig& cfg) {
  const SimplicialComplex K = load_complex(cfg);
  check_bound(cfg.bound);
  BigInt size = K.ambient_size();
  for (int k = 0; k < K.ambient_size(); ++k) size *= cfg.bound + 1;
  if (size > cfg.cell_cap) {
    throw ValidationError("m*(s+1)^m = " + to_string(size) + " exceeds the cell cap " +
                          std::to_string(cfg.cell_cap) + " (raise --cell-cap)");
  }
  const CubeComplex C = build_cube_complex(K, cfg.bound);
  if (!cfg.dump_dir.empty()) {
    std::filesystem::create_directories(cfg.dump_dir);
    for (int d = 1; d <= 2; ++d) {
      std::ofstream out(std::filesystem::path(cfg.dump_dir) / ("d" + std::to_string(d) + ".txt"));
      write_triplets(out, C.boundary(d));
    }
  }
  const HomologyResult h = h1_rank_and_torsion(C);
  if (cfg.format == Format::json) {
    Json out = to_json(h);
    out["cells"] = {C.cell_count(0), C.cell_count(1), C.cell_count(2)};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "cells: " << C.cell_count(0) << ' ' << C.cell_count(1) << ' '
            << C.cell_count(2) << '\n';
  std::cout << "rank: " << h.rank << '\n';
  std::cout << "torsion:";
  if (h.torsion.empty()) std::cout << " none";
  for (const auto& t : h.torsion) std::cout << ' ' << t;
  std::cout << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const VerifyReport r = run_verify_suite(cfg.seed, cfg.inject_fault);
  if (cfg.format == Format::json) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back(
          Json{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    }
    std::cout << Json{{"seed", cfg.seed}, {"passed", r.all_passed()}, {"checks", checks}}.dump(2)
              << '\n';
  } else {
    std::cout << "seed: " << cfg.seed << '\n';
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.passed) std::cout << "\n  counterexample: " << c.detail;
      std::cout << '\n';
    }
  }
  return r.all_passed() ? 0 : 2;
}

int word_rank(const RunConfig& cfg) {
  if (cfg.rank > 0) return cfg.rank;
  // Smallest rank that accepts every generator in the word.
  int rank = 2;
  const Word probe = parse_word(cfg.word, VertexSet::kMaxVertex);
  for (const auto& syl : probe.syllables()) rank = std::max(rank, syl.generator);
  return rank;
}

int auto_bound(const Word& w, int m) {
  Point p(static_cast<std::size_t>(m), 0);
  BigInt top = 1;
  for (const auto& syl : w.syllables()) {
    BigInt c = BigInt(p[syl.generator - 1]) + syl.exponent;
    if (c > top) top = c;
    if (c < 0 || c > 1'000'000) break;  // lift_path reports the violation
    p[syl.generator - 1] = static_cast<int>(c);
  }
  return top > 1'000'000 ? 1'000'000 : static_cast<int>(top);
}

void print_factors(const std::vector<SignedFactor>& factors, Format format) {
  for (const auto& f : factors) {
    if (format == Format::json) {
      std::cout << to_json(f).dump() << '\n';
    } else {
      std::cout << (f.sign > 0 ? "+ " : "- ") << format_descriptor(f.descriptor) << '\n';
    }
  }
}

int cmd_rewrite(const RunConfig& cfg, bool bound_given) {
  const int m = word_rank(cfg);
  const Word w = parse_word(cfg.word, m);
  const int s = bound_given ? cfg.bound : auto_bound(w, m);
  check_bound(s);
  if (cfg.mode == "f2") {
    print_factors(rewrite_f2(w).factors, cfg.format);
  } else if (cfg.mode == "basis") {
    print_factors(express_in_basis(w, m, s).factors, cfg.format);
  } else if (cfg.mode == "lift") {
    for (const auto& p : lift_path(w, m, s)) {
      if (cfg.format == Format::json) {
        std::cout << Json(p).dump() << '\n';
      } else {
        for (std::size_t k = 0; k < p.size(); ++k) std::cout << (k ? " " : "") << p[k];
        std::cout << '\n';
      }
    }
  } else if (cfg.mode == "decompose") {
    const GridTree tree(m, s);
    for (const auto& lf : decompose_loop(w, tree)) {
      const Point tail = tree.grid().point(lf.edge.tail);
      if (cfg.format == Format::json) {
        std::cout << Json{{"tail", tail}, {"direction", lf.edge.direction}, {"sign", lf.sign},
                          {"word", format_word(lf.loop)}}
                         .dump()
                  << '\n';
      } else {
        std::cout << (lf.sign > 0 ? "+ " : "- ") << "edge from (";
        for (std::size_t k = 0; k < tail.size(); ++k) std::cout << (k ? "," : "") << tail[k];
        std::cout << ") dir " << lf.edge.direction << ": " << format_word(lf.loop) << '\n';
      }
    }
  } else {
    throw ValidationError("unknown --mode " + cfg.mode);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generators and bases of commutator subgroups of right-angled Artin groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", cfg.input, "complex JSON file")->required();
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("-v,--verbose", cfg.verbose, "report timing on stderr");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "flagness, chordality, component table");
  add_common(analyze, true);
  analyze->add_option("--bound", cfg.bound, "bound s for the generator count");
  analyze->add_option("--table-cap", cfg.table_cap, "maximum table rows");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list generating commutators");
  add_common(enumerate, true);
  enumerate->add_option("--bound", cfg.bound, "exponent bound s")->required();
  enumerate->add_option("--groups", cfg.groups, "vertex group JSON for a graph product");

  CLI::App* count = app.add_subcommand("count", "count generators (P, J, W)");
  add_common(count, true);
  count->add_option("--bound", cfg.bound, "exponent bound s")->required();
  count->add_option("--groups", cfg.groups, "vertex group JSON for a graph product");

  CLI::App* homology = app.add_subcommand("homology", "H1 of the truncated cube complex");
  add_common(homology, true);
  homology->add_option("--bound", cfg.bound, "cube size s")->required();
  homology->add_option("--cell-cap", cfg.cell_cap, "refuse when m*(s+1)^m exceeds this");
  homology->add_option("--dump", cfg.dump_dir, "write boundary matrices as triplets here");

  CLI::App* verify = app.add_subcommand("verify", "run the identity and oracle self-checks");
  add_common(verify, false);
  verify->add_option("--seed", cfg.seed, "seed for random cases");
  // Test hook: perturbs one expected value to exercise exit code 2.
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");

  CLI::App* rewrite = app.add_subcommand("rewrite", "factor a commutator-subgroup word");
  add_common(rewrite, false);
  rewrite->add_option("--word", cfg.word, "word such as 1^2,2^-1,1^-2,2")->required();
  rewrite->add_option("--rank", cfg.rank, "number of generators m");
  CLI::Option* rewrite_bound = rewrite->add_option("--bound", cfg.bound, "cube size s");
  rewrite->add_option("--mode", cfg.mode, "basis, f2, lift or decompose")
      ->check(CLI::IsMember({"basis", "f2", "lift", "decompose"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  cfg.format = format == "json" ? Format::json : Format::text;

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (analyze->parsed()) code = cmd_analyze(cfg);
    else if (enumerate->parsed()) code = cmd_enumerate(cfg);
    else if (count->parsed()) code = cmd_count(cfg);
    else if (homology->parsed()) code = cmd_homology(cfg);
    else if (verify->parsed()) code = cmd_verify(cfg);
    else if (rewrite->parsed()) code = cmd_rewrite(cfg, rewrite_bound->count() > 0);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal verification failure: " << e.what() << '\n';
    return 2;
  }
  if (cfg.verbose) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed: " << dt.count() << " s\n";
  }
  return code;
}
