#include "raag/sampling.hpp"

namespace raag {

int draw(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Graph random_graph(int m, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (rng() >> 63) edges.emplace_back(a, b);
    }
  }
  return Graph(m, edges);
}

Word random_f2_commutator_word(std::mt19937_64& rng, std::size_t max_length) {
  while (true) {
    const int syllables = draw(rng, 0, 8);
    std::vector<Syllable> raw;
    BigInt sum[2] = {0, 0};
    int g = draw(rng, 1, 2);
    for (int k = 0; k < syllables; ++k) {
      int e = draw(rng, 1, 5) * (draw(rng, 0, 1) ? 1 : -1);
      raw.push_back(Syllable{g, e});
      sum[g - 1] += e;
      g = 3 - g;
    }
    raw.push_back(Syllable{g, -sum[g - 1]});
    raw.push_back(Syllable{3 - g, -sum[2 - g]});
    Word w = reduce(raw, 2);
    if (w.length() <= max_length) return w;
  }
}

}  // namespace raag
