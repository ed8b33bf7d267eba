#include "chief/icpc.hpp"

#include <algorithm>

#include "chief/arith.hpp"
#include "chief/context.hpp"
#include "chief/error.hpp"
#include "chief/lattice.hpp"

namespace chief {

bool is_ICPhi(const Group& h, GroupContext& ambient) {
  if (!ambient.group().contains_subgroup(h))
    throw DomainError("is_ICPhi: subgroup is not inside the group");
  if (h.order() > ambient.caps().lattice_cap)
    throw CapExceeded("subgroup order exceeds lattice cap in is_ICPhi");
  Group inter = intersect(h, ambient.commutator_with_group(h));
  return frattini_subgroup(h).contains_subgroup(inter);
}

bool is_ICPhi(const Group& h, const Group& g) {
  GroupContext ctx(g);
  return is_ICPhi(h, ctx);
}

namespace {

// Subgroups of h containing `floor`, ascending by (order, elements).
std::vector<Group> candidates_above(const Group& h, const Group& floor,
                                    const Caps& caps) {
  if (h.order() > caps.lattice_cap)
    throw CapExceeded("subgroup order " + std::to_string(h.order()) +
                      " exceeds lattice cap " +
                      std::to_string(caps.lattice_cap));
  std::vector<Group> out;
  for (const Group& t : all_subgroups(h).subgroups)
    if (t.contains_subgroup(floor))
      out.push_back(t);
  return out;
}

} // namespace

IcpcResult is_ICPC(const Group& h, GroupContext& ambient, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("is_ICPC: p must be prime");
  if (!ambient.group().contains_subgroup(h))
    throw DomainError("is_ICPC: subgroup is not inside the group");
  Group inter = intersect(h, ambient.commutator_with_group(h));
  for (const Group& t : candidates_above(h, inter, ambient.caps())) {
    PcapResult pcap = is_pCAP(t, ambient, p);
    if (pcap.holds)
      return {true, t, std::nullopt};
  }
  // No candidate works; report why H itself is not p-CAP.
  PcapResult top = is_pCAP(h, ambient, p);
  return {false, std::nullopt, top.violation};
}

IcpcResult is_ICPC(const Group& h, const Group& g, uint64_t p) {
  GroupContext ctx(g);
  return is_ICPC(h, ctx, p);
}

IcscResult is_ICSC(const Group& h, GroupContext& ambient) {
  if (!ambient.group().contains_subgroup(h))
    throw DomainError("is_ICSC: subgroup is not inside the group");
  Group inter = intersect(h, ambient.commutator_with_group(h));
  bool any_unknown = false;
  for (const Group& t : candidates_above(h, inter, ambient.caps())) {
    SemiCapResult sc = is_semiCAP(t, ambient);
    if (sc.verdict == Tri::yes)
      return {Tri::yes, t};
    if (sc.verdict == Tri::unknown)
      any_unknown = true;
  }
  return {any_unknown ? Tri::unknown : Tri::no, std::nullopt};
}

IcscResult is_ICSC(const Group& h, const Group& g) {
  GroupContext ctx(g);
  return is_ICSC(h, ctx);
}

SupplementResult has_supersolvable_supplement(const Group& h, GroupContext& ambient) {
  const Group& g = ambient.group();
  if (!g.contains_subgroup(h))
    throw DomainError("supplement search: subgroup is not inside the group");
  for (const Group& a : ambient.lattice().subgroups) {
    if (h.order() * a.order() % intersect(h, a).order() != 0)
      throw Error("internal: non-integral product size");
    uint64_t product = h.order() * a.order() / intersect(h, a).order();
    if (product != g.order())
      continue;
    if (ambient.subgroup_supersolvable(a))
      return {true, a};
  }
  return {false, std::nullopt};
}

SupplementResult has_supersolvable_supplement(const Group& h, const Group& g) {
  GroupContext ctx(g);
  return has_supersolvable_supplement(h, ctx);
}

std::vector<Group> hypothesis_targets(const Group& p_group, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("hypothesis_targets: p must be prime");
  if (p_part(p_group.order(), p) != p_group.order())
    throw DomainError("hypothesis_targets: group is not a p-group");
  const bool order4_clause = p == 2 && !p_group.is_abelian();
  std::vector<Group> targets;
  for (const Perm& e : p_group.elements()) {
    uint64_t o = e.order();
    if (o != p && !(order4_clause && o == 4))
      continue;
    Group c = p_group.subgroup({e});
    bool fresh = true;
    for (const Group& t : targets)
      if (t.order() == c.order() && t.same_subgroup(c)) {
        fresh = false;
        break;
      }
    if (fresh)
      targets.push_back(std::move(c));
  }
  sort_subgroups(targets);
  return targets;
}

} // namespace chief
