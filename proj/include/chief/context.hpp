#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "chief/caps.hpp"
#include "chief/chief_series.hpp"
#include "chief/group.hpp"
#include "chief/lattice.hpp"
#include "chief/morphism.hpp"

namespace chief {

/// Memoized view of one ambient group. Lattice, normal subgroups, chief
/// pairs, quotients, ambient commutators and per-subgroup predicates are
/// computed once and reused by the predicate sweeps.
///
/// A context is deliberately single-threaded; campaigns run one context per
/// catalogue group and parallelize across groups.
class GroupContext {
public:
  explicit GroupContext(Group g) : GroupContext(std::move(g), global_caps()) {}
  GroupContext(Group g, Caps caps) : g_(std::move(g)), caps_(caps) {}

  const Group& group() const { return g_; }
  const Caps& caps() const { return caps_; }

  const std::vector<Group>& normals();
  const SubgroupLattice& lattice();
  const std::vector<Group>& maximals();
  const std::vector<Group>& minimal_normals();
  const std::vector<ChiefFactor>& chief_pairs();

  /// Quotient morphism by a normal subgroup, cached per subgroup.
  const Morphism& quotient(const Group& n);
  /// Context of the quotient target, cached alongside the morphism.
  GroupContext& quotient_context(const Group& n);

  /// [h, G] with G the ambient group, cached per subgroup.
  Group commutator_with_group(const Group& h);

  bool subgroup_supersolvable(const Group& a);
  bool ambient_supersolvable() { return subgroup_supersolvable(g_); }

  std::optional<Group>& u_hyp_slot() { return u_hyp_; }
  std::optional<Group>& u_hyp_oracle_slot() { return u_hyp_oracle_; }

private:
  // Cache keyed by subgroup identity: bucketed on (order, element hash),
  // verified exactly on collision.
  template <typename V>
  class SubgroupKeyed {
  public:
    V* find(const Group& g) {
      auto it = map_.find({g.order(), g.element_hash()});
      if (it == map_.end())
        return nullptr;
      for (auto& entry : it->second)
        if (entry.first.same_subgroup(g))
          return &entry.second;
      return nullptr;
    }
    V& put(const Group& g, V v) {
      auto& vec = map_[{g.order(), g.element_hash()}];
      vec.emplace_back(g, std::move(v));
      return vec.back().second;
    }

  private:
    std::map<std::pair<uint64_t, uint64_t>, std::vector<std::pair<Group, V>>> map_;
  };

  Group g_;
  Caps caps_;
  std::optional<std::vector<Group>> normals_;
  std::optional<SubgroupLattice> lattice_;
  std::optional<std::vector<Group>> maximals_;
  std::optional<std::vector<Group>> min_normals_;
  std::optional<std::vector<ChiefFactor>> pairs_;
  std::optional<Group> u_hyp_;
  std::optional<Group> u_hyp_oracle_;
  SubgroupKeyed<Morphism> quotients_;
  SubgroupKeyed<std::unique_ptr<GroupContext>> quotient_contexts_;
  SubgroupKeyed<Group> commutators_;
  SubgroupKeyed<bool> supersolvable_;
};

} // namespace chief
