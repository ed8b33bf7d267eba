#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chief/chief_series.hpp"
#include "chief/group.hpp"

namespace chief {

class GroupContext;

/// H n [H,G] <= Phi(H).
bool is_ICPhi(const Group& h, GroupContext& ambient);
bool is_ICPhi(const Group& h, const Group& g);

struct IcpcResult {
  bool holds = false;
  std::optional<Group> witness;           // p-CAP subgroup T, H n [H,G] <= T <= H
  std::optional<ChiefFactor> certificate; // violating pd-factor for T = H on failure
};

/// ICPC: there is a p-CAP subgroup of G between H n [H,G] and H. The
/// existential is resolved by enumerating all subgroups of H above the
/// intersection, smallest first.
IcpcResult is_ICPC(const Group& h, GroupContext& ambient, uint64_t p);
IcpcResult is_ICPC(const Group& h, const Group& g, uint64_t p);

struct IcscResult {
  Tri verdict = Tri::no;
  std::optional<Group> witness;
};

/// ICSC: there is a semi-CAP subgroup of G between H n [H,G] and H.
/// An unknown semi-CAP verdict propagates, never collapsing to false.
IcscResult is_ICSC(const Group& h, GroupContext& ambient);
IcscResult is_ICSC(const Group& h, const Group& g);

struct SupplementResult {
  bool holds = false;
  std::optional<Group> witness;
};

/// Some A <= G with HA = G (set product, via the order formula) and A
/// supersolvable. A = G qualifies exactly when G itself is supersolvable.
SupplementResult has_supersolvable_supplement(const Group& h, GroupContext& ambient);
SupplementResult has_supersolvable_supplement(const Group& h, const Group& g);

/// Cyclic subgroups of P of order p, plus those of order 4 when p = 2 and
/// P is nonabelian. P must be a p-group.
std::vector<Group> hypothesis_targets(const Group& p_group, uint64_t p);

} // namespace chief
