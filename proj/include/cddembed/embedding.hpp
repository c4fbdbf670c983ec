#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cddembed/decomposition.hpp"
#include "cddembed/depth.hpp"
#include "cddembed/matroid.hpp"

namespace cddembed {

// Bookkeeping of one recursion node of the construction.
struct FrameStats {
  std::string path;       // "r", "r.1", "r.1.2", ...
  std::size_t level = 0;  // distance from the top frame
  std::size_t k = 0;      // children of the tree node
  std::size_t rank = 0;   // rank of the frame's input matroid
  std::size_t lambda = 0;  // λ* of the children's element blocks, as measured
  bool lambda_measured = false;
  std::size_t d_a = 0;
  std::size_t d_c = 0;
  std::vector<std::size_t> d;        // dim X_i/A
  std::vector<std::size_t> d_kept;   // vectors of B_i kept in the global basis
  std::vector<std::size_t> n;        // rank N_i - rank M''_i
  std::size_t rank_n = 0;
};

struct EmbedOptions {
  // Re-check every inequality of the construction while it runs.
  bool assertions = true;
};

struct EmbeddingResult {
  RepresentedMatroid n;
  MinorSchedule schedule;         // contract z's and y's, then delete the rest
  DepthCertificate certificate;   // canonical: verify_certificate accepts it
  std::size_t raw_depth = 0;      // value of the certificate before canonicalization
  std::size_t bound = 0;          // 2r(4^d - 1) + 1
  std::vector<FrameStats> frames;
};

// 2r(4^d - 1) + 1.
std::size_t embedding_bound(std::size_t d, std::size_t r);

// Builds N containing m as a minor, with cdd(N) <= embedding_bound(d, r)
// witnessed by the certificate. Labels of m are kept; new elements are named
// a@<path>#<j> and z@<path>#<i>.<j>.
//
// The representation is preserved exactly: contracting the scheduled
// elements of N's matrix and deleting the rest leaves m's matrix, because
// every contracted element of N is a unit vector on one of the last rows and
// the top rank(m) rows of m's elements are m's own columns.
//
// Throws DecompositionError if t is not a rooted (d, r)-decomposition of m.
EmbeddingResult embed(const RepresentedMatroid& m, const DecompositionTree& t, std::size_t d,
                      std::size_t r, const EmbedOptions& options = {});

// The rank sandwich between a frame's input matroid and the restriction of
// M'' to one child's block: rank_M X - d_A <= rank_{M''_i} X <= rank_M X,
// and the resulting λ growth of at most d_A on disjoint pairs.
struct RankTransferReport {
  bool ok = true;
  std::size_t subsets_checked = 0;
  std::size_t pairs_checked = 0;
  std::string witness;  // first violation
};

inline constexpr std::size_t kRankTransferEnumCap = 12;

// mpp_i and m must share the labels of block; all subsets of the block are
// checked when it has at most kRankTransferEnumCap elements, otherwise a
// seeded sample.
RankTransferReport check_rank_transfer(const RepresentedMatroid& mpp_i,
                                       const RepresentedMatroid& m,
                                       const std::vector<std::string>& block, std::size_t d_a,
                                       std::uint64_t seed = 1);

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;  // value or witness
};

struct EmbeddingVerification {
  std::vector<CheckOutcome> checks;
  std::size_t certificate_value = 0;
  bool recovery_exact = false;  // false when the basis check was sampled
  bool ok() const;
};

struct VerifyOptions {
  // Above this many elements matroid equality is checked on random subsets.
  std::size_t max_enum = kBasisSetGuard;
  std::size_t samples = 5000;
  std::uint64_t seed = 1;
};

// Checks (1) the schedule turns n into m (same bases under the labels),
// (2) the certificate replays on n with value at most embedding_bound(d, r),
// (3) the recovered matrix has the same row space as m's.
EmbeddingVerification verify_embedding(const RepresentedMatroid& n, const MinorSchedule& schedule,
                                       const DepthCertificate& certificate,
                                       const RepresentedMatroid& m, std::size_t d, std::size_t r,
                                       const VerifyOptions& options = {});

// Bases agree on `samples` random subsets of size rank; empty on success,
// otherwise a witness.
std::optional<std::string> sampled_matroid_difference(const RepresentedMatroid& a,
                                                      const RepresentedMatroid& b,
                                                      std::size_t samples, std::uint64_t seed);

// Exact: a description of a set that is a basis of one and not the other.
std::optional<std::string> basis_difference(const RepresentedMatroid& a,
                                            const RepresentedMatroid& b);

std::string format_frames(const std::vector<FrameStats>& frames);

}  // namespace cddembed
