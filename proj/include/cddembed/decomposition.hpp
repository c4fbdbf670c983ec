#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cddembed/io.hpp"
#include "cddembed/matroid.hpp"

namespace cddembed {

struct TreeNode {
  std::string name;     // inner vertices
  std::string element;  // leaves; empty for inner vertices
  std::vector<std::size_t> children;
  std::optional<std::size_t> parent;

  bool is_leaf() const { return !element.empty(); }
};

// A leaf-labeled tree stored with a designated root (node 0 unless re-rooted).
// The rooted checks use the root; the unrooted checks ignore it.
//
// Text form: "(name child child ...)" for inner vertices and a bare label for
// leaves, e.g. "(root (c1 e1 e2) (c2 e3 e4))".
class DecompositionTree {
 public:
  static DecompositionTree single_leaf(std::string element);
  static DecompositionTree parse(std::string_view text);
  static DecompositionTree from_sexpr(const SExpr& e);

  // Builders. The first node added becomes the root.
  std::size_t add_inner(std::string name, std::optional<std::size_t> parent);
  std::size_t add_leaf(std::string element, std::size_t parent);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(std::size_t id) const { return nodes_.at(id); }
  std::size_t root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }

  // Leaf elements below a node, in preorder.
  std::vector<std::string> leaf_elements(std::size_t id) const;
  std::vector<std::string> elements() const { return leaf_elements(root()); }
  std::vector<std::size_t> neighbors(std::size_t id) const;

  // Maximum number of edges from the root to a leaf.
  std::size_t depth() const;
  // Maximum distance from a vertex.
  std::size_t eccentricity(std::size_t id) const;
  // Minimum eccentricity over all vertices.
  std::size_t radius() const;

  // The subtree rooted at id, renumbered in preorder.
  DecompositionTree subtree(std::size_t id) const;
  // The same unrooted tree rooted at id, renumbered in preorder.
  DecompositionTree rerooted(std::size_t id) const;

  SExpr to_sexpr_tree() const;
  std::string to_string() const;

 private:
  std::vector<TreeNode> nodes_;
};

struct VertexViolation {
  std::size_t node;
  std::string name;
  std::size_t value;  // the lambda* achieved at the vertex
};

struct DecompositionReport {
  bool valid = false;
  bool depth_ok = false;
  std::size_t measured_depth = 0;  // depth for rooted checks, radius otherwise
  std::size_t max_lambda = 0;
  std::vector<VertexViolation> violations;
  // Set for the single-leaf tree, which is accepted for every (d, r).
  bool degenerate = false;
};

// Throws DecompositionError when the leaves do not biject with the ground set
// or an inner vertex has degree 1.
DecompositionReport validate_unrooted(const RepresentedMatroid& m,
                                      const DecompositionTree& t, std::size_t d,
                                      std::size_t r);

// Throws DecompositionError when the leaves do not biject with the ground set.
DecompositionReport validate_rooted(const RepresentedMatroid& m,
                                    const DecompositionTree& t, std::size_t d,
                                    std::size_t r);

// Roots a valid unrooted (d, r)-decomposition at an inner vertex of minimum
// eccentricity (smallest node id on ties).
DecompositionTree root_decomposition(const RepresentedMatroid& m,
                                     const DecompositionTree& t, std::size_t d,
                                     std::size_t r);

inline constexpr std::size_t kSearchGuard = 10;
inline constexpr std::size_t kBranchDepthGuard = 7;

// First rooted (d, r)-decomposition found by exhaustive search, or nullopt.
// Children of a vertex are the blocks of a set partition; partitions are
// tried in lexicographic order of their restricted growth strings.
std::optional<DecompositionTree> search_rooted(const RepresentedMatroid& m,
                                               std::size_t d, std::size_t r);

struct BranchDepthResult {
  std::size_t value = 0;
  // An unrooted (value, value)-decomposition; absent for the empty matroid.
  std::optional<DecompositionTree> witness;
};

// Exact branch-depth by exhaustive search. Returns 0 for the empty matroid
// and 1 for a single element.
BranchDepthResult branch_depth_oracle(const RepresentedMatroid& m);

}  // namespace cddembed
