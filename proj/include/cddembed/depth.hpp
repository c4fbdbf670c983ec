#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cddembed/matroid.hpp"

namespace cddembed {

// Which single-element operations a depth parameter may use on a connected
// matroid: contraction-deletion-depth, contraction-depth, deletion-depth.
enum class DepthMode { kCdd, kCd, kDd };

const char* to_string(DepthMode mode);
DepthMode parse_depth_mode(std::string_view s);

// A decomposition strategy whose replay bounds a depth parameter.
//   leaf:     the current minor is the single element `element`; value 1
//   contract/delete: one step on `element`; value 1 + value(child)
//   split:    children are the components of the current minor; value is the
//             maximum over children (0 when there are none)
struct DepthCertificate {
  enum class Kind { kLeaf, kContract, kDelete, kSplit };

  Kind kind = Kind::kSplit;
  std::string element;
  std::vector<DepthCertificate> children;

  static DepthCertificate leaf(std::string element);
  static DepthCertificate step(StepKind kind, std::string element, DepthCertificate child);
  static DepthCertificate split(std::vector<DepthCertificate> children);

  // Value of the certificate by the rules above, without replaying it.
  std::size_t depth() const;
  // Every element named in the certificate.
  std::vector<std::string> elements() const;

  friend bool operator==(const DepthCertificate&, const DepthCertificate&) = default;
};

// "(leaf e)", "(contract e <child>)", "(delete e <child>)", "(split <child> ...)".
DepthCertificate parse_certificate(std::string_view text);
std::string format_certificate(const DepthCertificate& c);

struct DepthResult {
  std::size_t value = 0;
  DepthCertificate certificate;
};

inline constexpr std::size_t kDepthSolverGuard = 16;

// Exact values by the recursive definitions; the empty matroid has depth 0.
// Throw GuardExceeded above kDepthSolverGuard elements.
DepthResult solve_depth(const RepresentedMatroid& m, DepthMode mode);
inline DepthResult cdd(const RepresentedMatroid& m) { return solve_depth(m, DepthMode::kCdd); }
inline DepthResult cd(const RepresentedMatroid& m) { return solve_depth(m, DepthMode::kCd); }
inline DepthResult dd(const RepresentedMatroid& m) { return solve_depth(m, DepthMode::kDd); }

// Replays the certificate on m and returns its value. Throws CertificateError
// naming the offending node when an element is missing, a loop is
// contracted, a step is not allowed in this mode, a leaf does not match a
// single-element minor, or split children differ from the components.
std::size_t verify_certificate(const RepresentedMatroid& m, const DepthCertificate& cert,
                               DepthMode mode);

// Rewrites a certificate whose splits only separate unions of components, and
// whose steps may act on disconnected minors, into one that verify_certificate
// accepts. The value never increases.
DepthCertificate canonicalize_certificate(const RepresentedMatroid& m,
                                          const DepthCertificate& cert);

}  // namespace cddembed
