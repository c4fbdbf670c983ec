#include "cddembed/generators.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "cddembed/error.hpp"

namespace cddembed {

void MultiGraph::add_edge(std::size_t u, std::size_t v, std::string label) {
  if (u >= vertices || v >= vertices) {
    throw Error("edge " + label + ": endpoint out of range");
  }
  for (const Edge& e : edges) {
    if (e.label == label) throw Error("duplicate edge label '" + label + "'");
  }
  edges.push_back({u, v, std::move(label)});
}

MultiGraph parse_edge_list(std::string_view text) {
  MultiGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    auto num = [&](std::size_t i) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(tok[i].data(), tok[i].data() + tok[i].size(), v);
      if (ec != std::errc() || ptr != tok[i].data() + tok[i].size()) {
        throw ParseError("expected a non-negative integer, found '" + tok[i] + "'", line_no,
                         line.find(tok[i]) + 1);
      }
      return v;
    };
    if (!header) {
      if (tok.size() != 1) throw ParseError("expected the vertex count", line_no, 1);
      g.vertices = num(0);
      header = true;
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) {
      throw ParseError("expected '<u> <v> [label]'", line_no, 1);
    }
    std::string label = tok.size() == 3 ? tok[2] : "e" + std::to_string(g.edges.size() + 1);
    try {
      g.add_edge(num(0), num(1), label);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (!header) throw ParseError("missing vertex count", line_no + 1, 1);
  return g;
}

RepresentedMatroid graphic(const MultiGraph& g, std::uint32_t p) {
  PrimeField f(p);
  Matrix inc(f, g.vertices, g.edges.size());
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < g.edges.size(); ++c) {
    const MultiGraph::Edge& e = g.edges[c];
    labels.push_back(e.label);
    if (e.u == e.v) continue;  // a loop edge is a zero column
    inc.set(e.u, c, 1);
    inc.set(e.v, c, f.neg(1));
  }
  return RepresentedMatroid(std::move(inc), std::move(labels));
}

FatCycle fat_cycle(std::size_t n, std::uint32_t p) {
  if (n < 2) throw Error("fat cycle needs n >= 2");
  MultiGraph g;
  g.vertices = n;
  DecompositionTree t;
  const std::size_t root = t.add_inner("root", std::nullopt);
  for (std::size_t c = 1; c <= n; ++c) {
    const std::size_t cls = t.add_inner("c" + std::to_string(c), root);
    for (std::size_t j = 1; j <= n; ++j) {
      std::string label = "e" + std::to_string(c) + "." + std::to_string(j);
      g.add_edge(c - 1, c % n, label);
      t.add_leaf(label, cls);
    }
  }
  return {graphic(g, p), std::move(t)};
}

RepresentedMatroid uniform(std::size_t r, std::size_t n, std::uint32_t p) {
  if (r > n) throw RepresentabilityError("uniform matroid needs r <= n");
  PrimeField f(p);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  if (r == n) return RepresentedMatroid(Matrix::identity(f, n), labels);
  if (r == 0) return RepresentedMatroid(Matrix(f, 0, n), labels);
  if (r == 1) {
    Matrix ones(f, 1, n);
    for (std::size_t c = 0; c < n; ++c) ones.set(0, c, 1);
    return RepresentedMatroid(std::move(ones), labels);
  }
  if (n > static_cast<std::size_t>(p) + 1) {
    throw RepresentabilityError("U(" + std::to_string(r) + "," + std::to_string(n) +
                                ") has no Vandermonde representation over GF(" +
                                std::to_string(p) + ")");
  }
  Matrix v(f, r, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (c == p) {  // the point at infinity
      v.set(r - 1, c, 1);
      continue;
    }
    Residue power = 1;
    for (std::size_t i = 0; i < r; ++i) {
      v.set(i, c, power);
      power = f.mul(power, static_cast<Residue>(c));
    }
  }
  return RepresentedMatroid(std::move(v), labels);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

RepresentedMatroid random_instance(std::uint64_t seed, const RandomParams& params) {
  SplitMix64 rng(seed);
  PrimeField f(params.p);
  Matrix m(f, params.rows, params.cols);
  for (std::size_t r = 0; r < params.rows; ++r) {
    for (std::size_t c = 0; c < params.cols; ++c) {
      if (rng.below(100) < params.density) {
        m.set(r, c, static_cast<Residue>(1 + rng.below(params.p - 1)));
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t c = 1; c <= params.cols; ++c) labels.push_back("e" + std::to_string(c));
  return RepresentedMatroid(std::move(m), std::move(labels));
}

RandomParams corpus_params(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x5eed5eed5eed5eedull);
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  RandomParams p;
  p.rows = 2 + rng.below(3);
  p.cols = 4 + rng.below(6);
  p.p = kPrimes[rng.below(3)];
  p.density = 35 + static_cast<unsigned>(rng.below(40));
  return p;
}

std::vector<CorpusEntry> parse_manifest(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    CorpusEntry e;
    if (!(ls >> e.name) || e.name[0] == '#') continue;
    if (!(ls >> e.first >> e.count)) {
      throw ParseError("expected '<name> <first-seed> <count>'", line_no, 1);
    }
    out.push_back(e);
  }
  return out;
}

std::vector<std::uint64_t> manifest_seeds(const std::vector<CorpusEntry>& entries,
                                          std::string_view name) {
  std::vector<std::uint64_t> seeds;
  for (const CorpusEntry& e : entries) {
    if (e.name != name) continue;
    for (std::size_t i = 0; i < e.count; ++i) seeds.push_back(e.first + i);
  }
  return seeds;
}

const std::vector<CorpusEntry>& builtin_manifest() {
  static const std::vector<CorpusEntry> kManifest = {
      {"subspaces", 1000, 1000},   // random subspace families
      {"corpus", 1, 60},       // random matroids via corpus_params
      {"embed", 5000, 400},    // candidates for the per-instance embedding run
      {"trees", 9000, 40},     // random unrooted trees over corpus matroids
  };
  return kManifest;
}

DecompositionTree random_tree(const RepresentedMatroid& m, std::uint64_t seed) {
  const std::size_t n = m.size();
  if (n == 0) throw DecompositionError("random tree needs at least one element");
  if (n == 1) return DecompositionTree::single_leaf(m.labels()[0]);
  SplitMix64 rng(seed);
  const std::size_t inner = 1 + rng.below(std::max<std::size_t>(1, n / 2));
  DecompositionTree t;
  std::vector<std::size_t> inner_ids;
  inner_ids.push_back(t.add_inner("v0", std::nullopt));
  for (std::size_t i = 1; i < inner; ++i) {
    inner_ids.push_back(t.add_inner("v" + std::to_string(i), inner_ids[rng.below(i)]));
  }
  // Every inner vertex gets a leaf, so none has degree 1.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t parent = i < inner ? inner_ids[i] : inner_ids[rng.below(inner)];
    t.add_leaf(m.labels()[order[i]], parent);
  }
  return t;
}

}  // namespace cddembed
