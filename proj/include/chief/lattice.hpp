#pragma once

#include <cstdint>
#include <vector>

#include "chief/group.hpp"

namespace chief {

/// Every subgroup of an ambient group, sorted by (order, element list) so
/// enumeration order is reproducible. normal/maximal flags align with
/// `subgroups`. Immutable once built.
struct SubgroupLattice {
  Group ambient;
  std::vector<Group> subgroups;
  std::vector<bool> normal_index;
  std::vector<bool> maximal_index;
};

/// Full subgroup enumeration by closing the cyclic subgroups under pairwise
/// joins. Requires |g| within the lattice cap.
SubgroupLattice all_subgroups(const Group& g);

/// All normal subgroups, via joins of normal closures of class representatives
/// (does not need the full lattice). Sorted.
std::vector<Group> normal_subgroups(const Group& g);

std::vector<Group> maximal_subgroups(const Group& g);
std::vector<Group> minimal_normal_subgroups(const Group& g);

/// One Sylow p-subgroup (all are conjugate; the representative is
/// deterministic). Trivial when p does not divide |g|.
Group sylow_subgroup(const Group& g, uint64_t p);

Group centralizer(const Group& g, const Group& s);
Group normalizer(const Group& g, const Group& s);

Group center(const Group& g);
Group derived_subgroup(const Group& g);
Group frattini_subgroup(const Group& g);   // intersection of maximals
Group fitting_subgroup(const Group& g);    // join of the p-cores
Group p_core(const Group& g, uint64_t p);        // O_p(g)
Group p_prime_core(const Group& g, uint64_t p);  // O_{p'}(g)
Group p_residual(const Group& g, uint64_t p);    // O^p(g), generated by p'-elements
Group hypercenter(const Group& g);               // limit of the upper central series
Group layer_subgroup(const Group& g);            // E(g): join of components
Group generalized_fitting(const Group& g);       // F*(g)

bool is_nilpotent(const Group& g);
bool is_solvable(const Group& g);
bool is_supersolvable(const Group& g);  // every chief factor of prime order
bool is_p_nilpotent(const Group& g, uint64_t p);

/// Group exponent: lcm of element orders.
uint64_t exponent(const Group& g);

/// Sorts a family of subgroups by (order, element list), in place.
void sort_subgroups(std::vector<Group>& subs);

} // namespace chief
