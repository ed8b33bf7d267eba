#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chief/group.hpp"

namespace chief {

class GroupContext;

/// Three-valued verdict for predicates whose search may hit a cap.
enum class Tri : uint8_t { no, yes, unknown };

inline Tri tri_of(bool b) { return b ? Tri::yes : Tri::no; }

/// A chief factor above/below of the ambient group: both terms normal, with
/// above/below minimal normal in the quotient by below.
struct ChiefFactor {
  Group below;
  Group above;
  uint64_t factor_order = 0;
  std::vector<uint64_t> pd_primes; // primes dividing factor_order
};

struct ChiefSeries {
  std::vector<Group> terms; // ascending chain, trivial .. G
  std::vector<ChiefFactor> factors;
};

/// All pairs (K, H) of normal subgroups with H/K minimal normal in G/K.
/// Equivalent to the factors appearing in chief series: a pair is chief
/// exactly when no normal subgroup lies strictly between.
std::vector<ChiefFactor> chief_factor_pairs(const Group& g,
                                            const std::vector<Group>& normals);

struct SeriesEnumeration {
  std::vector<ChiefSeries> series;
  bool complete = true; // false when the limit cut the walk short
};

/// Depth-first enumeration of chief series, at most `limit` of them.
SeriesEnumeration chief_series_enumerate(const Group& g,
                                         const std::vector<ChiefFactor>& pairs,
                                         uint64_t limit);
SeriesEnumeration chief_series_enumerate(GroupContext& ambient, uint64_t limit);

enum class CoverAvoid : uint8_t { covers, avoids, neither };

/// covers: H <= A*K; avoids: A n H <= K. Mutually exclusive for a proper
/// factor, so the verdict is single-valued.
CoverAvoid cover_avoid(const Group& a, const ChiefFactor& f);

struct PcapResult {
  bool holds = false;
  std::optional<ChiefFactor> violation; // a pd-factor that is neither covered nor avoided
};

/// Definition of a p-CAP subgroup: covers or avoids every pd-chief factor.
PcapResult is_pCAP(const Group& a, GroupContext& ambient, uint64_t p);
PcapResult is_pCAP(const Group& a, const Group& g, uint64_t p);

struct SemiCapResult {
  Tri verdict = Tri::no;
  std::optional<ChiefSeries> witness;
};

/// Semi-CAP: some chief series is covered-or-avoided factor by factor.
/// The search walks the chief-pair DAG with memoization; if the configured
/// series bound is hit the verdict is unknown, never a false negative.
SemiCapResult is_semiCAP(const Group& a, GroupContext& ambient);
SemiCapResult is_semiCAP(const Group& a, const Group& g);

/// U-hypercenter by the ascending construction: each layer joins all
/// prime-order minimal normal subgroups of the current quotient.
Group u_hypercenter(GroupContext& ambient);
Group u_hypercenter(const Group& g);

/// Independent route: largest normal subgroup reachable from the trivial
/// subgroup through prime-order chief pairs. Agrees with u_hypercenter on
/// every group (checked in the acceptance suite).
Group u_hypercenter_oracle(GroupContext& ambient);
Group u_hypercenter_oracle(const Group& g);

} // namespace chief
