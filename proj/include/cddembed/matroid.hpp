#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cddembed/matrix.hpp"

namespace cddembed {

// Column indices into a RepresentedMatroid, sorted and duplicate-free.
using ElementSet = std::vector<std::size_t>;

// A vector matroid over GF(p): one labeled column per element. The matrix
// always has full row rank, so rows() == rank().
class RepresentedMatroid {
 public:
  // Labels default to c0..c{n-1} when empty. A matrix without full row rank
  // is normalized to its RREF with zero rows dropped.
  explicit RepresentedMatroid(Matrix matrix, std::vector<std::string> labels = {});

  const PrimeField& field() const { return matrix_.field(); }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return matrix_.rows(); }

  bool has(const std::string& label) const;
  // Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;
  ElementSet indices_of(const std::vector<std::string>& labels) const;
  ElementSet ground() const;
  std::vector<std::string> labels_of(const ElementSet& set) const;

  Vector column(std::size_t i) const { return matrix_.column(i); }
  bool is_loop(std::size_t i) const;

  std::size_t rank_of(const ElementSet& set) const;
  std::size_t rank_of_labels(const std::vector<std::string>& labels) const;

  RepresentedMatroid delete_element(const std::string& label) const;
  // Pivot the column to a unit vector, then drop its row and the column.
  // Throws LoopContraction for a loop.
  RepresentedMatroid contract(const std::string& label) const;
  // Keep only the given columns, in the given order.
  RepresentedMatroid restrict_to(const ElementSet& set) const;
  // Columns permuted into the order of the given labels (a permutation of
  // this matroid's labels).
  RepresentedMatroid reorder(const std::vector<std::string>& labels) const;

 private:
  Matrix matrix_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class StepKind { kContract, kDelete };

struct MinorStep {
  StepKind kind;
  std::string label;
  friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

// Ordered contract/delete steps; labels are distinct across steps.
struct MinorSchedule {
  std::vector<MinorStep> steps;
  friend bool operator==(const MinorSchedule&, const MinorSchedule&) = default;
};

// Applies steps in order. Failures raise ScheduleError carrying the step
// index.
RepresentedMatroid apply_schedule(const RepresentedMatroid& m,
                                  const MinorSchedule& schedule);

// Partition into components: loops are singletons, the rest are connected
// components of the bipartite support graph of the standard form [I | D].
// Blocks are sorted and ordered by their smallest element.
std::vector<ElementSet> components(const RepresentedMatroid& m);
bool is_connected(const RepresentedMatroid& m);

// The set of bases as bitmasks over column indices.
struct BasisSetEncoding {
  std::size_t ground_size = 0;
  std::size_t rank = 0;
  std::vector<std::uint32_t> bases;  // sorted
  friend bool operator==(const BasisSetEncoding&, const BasisSetEncoding&) = default;
};

inline constexpr std::size_t kBasisSetGuard = 25;

// Throws GuardExceeded above kBasisSetGuard elements.
BasisSetEncoding basis_set(const RepresentedMatroid& m);

// True if the encoding is nonempty and satisfies basis exchange. Throws
// GuardExceeded above 12 elements.
bool satisfies_basis_exchange(const BasisSetEncoding& b);

// Same label set and same bases under the identity labeling.
bool same_matroid(const RepresentedMatroid& a, const RepresentedMatroid& b);

// Same label set and equal row spaces once columns are aligned by label, i.e.
// the representations differ by an invertible row transformation.
bool same_representation(const RepresentedMatroid& a, const RepresentedMatroid& b);

}  // namespace cddembed
