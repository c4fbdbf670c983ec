#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cddembed/decomposition.hpp"
#include "cddembed/matroid.hpp"

namespace cddembed {

struct MultiGraph {
  struct Edge {
    std::size_t u;
    std::size_t v;
    std::string label;
  };
  std::size_t vertices = 0;
  std::vector<Edge> edges;

  // Throws Error on an endpoint out of range or a repeated label.
  void add_edge(std::size_t u, std::size_t v, std::string label);
};

// "<vertices>" on the first line, then "<u> <v> [label]" per edge; labels
// default to e1, e2, ... ('#' comments allowed).
MultiGraph parse_edge_list(std::string_view text);

// Signed vertex-edge incidence matrix reduced to full row rank.
RepresentedMatroid graphic(const MultiGraph& g, std::uint32_t p);

struct FatCycle {
  RepresentedMatroid matroid;
  // root -> one node per parallel class -> its edges.
  DecompositionTree tree;
};

// The n-cycle with every edge replaced by n parallel copies. Labels are
// e<class>.<copy>, both 1-based. Throws Error for n < 2.
FatCycle fat_cycle(std::size_t n, std::uint32_t p = 2);

// Every r-subset of the n elements is a basis. Columns are (1, t, ..., t^{r-1})
// for t = 0..p-1, then (0, ..., 0, 1). Throws RepresentabilityError when
// 1 < r < n and n > p + 1.
RepresentedMatroid uniform(std::size_t r, std::size_t n, std::uint32_t p);

// SplitMix64; the sequence for a seed is fixed on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct RandomParams {
  std::size_t rows = 3;
  std::size_t cols = 6;
  std::uint32_t p = 2;
  // Percentage of entries drawn nonzero.
  unsigned density = 50;
};

// Entries drawn from SplitMix64(seed); labels e1..e<cols>.
RepresentedMatroid random_instance(std::uint64_t seed, const RandomParams& params);

// Parameters of the corpus instance for a seed: 2-4 rows, 4-9 columns over
// GF(2), GF(3) or GF(5).
RandomParams corpus_params(std::uint64_t seed);

// The seeds listed in a manifest: one "<name> <first> <count>" per line.
struct CorpusEntry {
  std::string name;
  std::uint64_t first = 0;
  std::size_t count = 0;
};
std::vector<CorpusEntry> parse_manifest(std::string_view text);
std::vector<std::uint64_t> manifest_seeds(const std::vector<CorpusEntry>& entries,
                                          std::string_view name);

// Seeds built into the library; identical to tests/data/corpus_manifest.txt.
const std::vector<CorpusEntry>& builtin_manifest();

// A random leaf-labeled tree over the matroid's elements whose inner vertices
// have degree at least 2.
DecompositionTree random_tree(const RepresentedMatroid& m, std::uint64_t seed);

}  // namespace cddembed
