#include "chief/context.hpp"

#include <string>

#include "chief/error.hpp"

namespace chief {

const std::vector<Group>& GroupContext::normals() {
  if (!normals_)
    normals_ = normal_subgroups(g_);
  return *normals_;
}

const SubgroupLattice& GroupContext::lattice() {
  if (!lattice_) {
    if (g_.order() > caps_.lattice_cap)
      throw CapExceeded("group order " + std::to_string(g_.order()) +
                        " exceeds lattice cap " +
                        std::to_string(caps_.lattice_cap));
    lattice_ = all_subgroups(g_);
  }
  return *lattice_;
}

const std::vector<Group>& GroupContext::maximals() {
  if (!maximals_) {
    const SubgroupLattice& lat = lattice();
    std::vector<Group> out;
    for (size_t i = 0; i < lat.subgroups.size(); ++i)
      if (lat.maximal_index[i])
        out.push_back(lat.subgroups[i]);
    maximals_ = std::move(out);
  }
  return *maximals_;
}

const std::vector<Group>& GroupContext::minimal_normals() {
  if (!min_normals_) {
    std::vector<Group> out;
    for (const Group& n : normals()) {
      if (n.is_trivial())
        continue;
      bool minimal = true;
      for (const Group& m : normals()) {
        if (m.is_trivial() || m.order() >= n.order())
          continue;
        if (n.contains_subgroup(m)) {
          minimal = false;
          break;
        }
      }
      if (minimal)
        out.push_back(n);
    }
    min_normals_ = std::move(out);
  }
  return *min_normals_;
}

const std::vector<ChiefFactor>& GroupContext::chief_pairs() {
  if (!pairs_)
    pairs_ = chief_factor_pairs(g_, normals());
  return *pairs_;
}

const Morphism& GroupContext::quotient(const Group& n) {
  if (Morphism* hit = quotients_.find(n))
    return *hit;
  return quotients_.put(n, quotient_by(g_, n));
}

GroupContext& GroupContext::quotient_context(const Group& n) {
  if (auto* hit = quotient_contexts_.find(n))
    return **hit;
  const Morphism& q = quotient(n);
  return *quotient_contexts_.put(
      n, std::make_unique<GroupContext>(q.target(), caps_));
}

Group GroupContext::commutator_with_group(const Group& h) {
  if (Group* hit = commutators_.find(h))
    return *hit;
  return commutators_.put(h, commutator_subgroup(h, g_));
}

bool GroupContext::subgroup_supersolvable(const Group& a) {
  if (bool* hit = supersolvable_.find(a))
    return *hit;
  return supersolvable_.put(a, is_supersolvable(a));
}

} // namespace chief
