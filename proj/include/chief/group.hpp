#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "chief/perm.hpp"

namespace chief {

/// A finite permutation group backed by a base and strong generating set.
///
/// Order and membership come from the stabilizer chain; full element
/// enumeration is available (and cached) for set-level work at desk scale.
/// Groups are immutable after construction, cheap to copy (shared internals),
/// and safe to share across threads. Subgroups carry a reference to the
/// group they were created from.
class Group {
public:
  /// Builds a root ambient group. Throws CapExceeded when the resulting
  /// order exceeds the configured max_order cap.
  static Group from_generators(unsigned degree, std::vector<Perm> gens);

  /// Subgroup of *this; every generator must pass the membership test.
  Group subgroup(std::vector<Perm> gens) const;

  unsigned degree() const;
  uint64_t order() const;
  const std::vector<Perm>& generators() const;
  const std::vector<Perm>& strong_generators() const;
  const std::vector<unsigned>& base() const;

  bool contains(const Perm& p) const;
  bool contains_subgroup(const Group& sub) const;
  /// Identity as element sets (degree, order and mutual generator membership).
  bool same_subgroup(const Group& other) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool is_normal_in(const Group& g) const;

  /// All elements, sorted ascending. Computed once, thread-safe.
  const std::vector<Perm>& elements() const;
  /// FNV-1a over the sorted element list; used to bucket subgroups.
  uint64_t element_hash() const;

  Perm random_element(std::mt19937& rng) const;

  bool has_parent() const;
  Group parent() const;

  /// Pointer identity of the shared implementation.
  const void* impl_id() const;

private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Group trivial_subgroup(const Group& g);

/// Smallest subgroup of g containing a and b. Both must lie inside g.
Group join(const Group& g, const Group& a, const Group& b);

/// {x : x in a and x in b}; degrees must match.
Group intersect(const Group& a, const Group& b);

/// Smallest normal subgroup of g containing s.
Group normal_closure(const Group& g, const Group& s);

/// [h, g]: normal closure in g of the generator commutators. Normal in g,
/// and h * [h,g] equals the normal closure of h in g.
Group commutator_subgroup(const Group& h, const Group& g);

/// Partition of the elements of g into conjugacy classes, each class sorted,
/// classes ordered by their least element.
std::vector<std::vector<Perm>> conjugacy_classes(const Group& g);

/// Subgroup of `parent` generated by `elems` (membership-filtered closure).
Group generated_subgroup(const Group& parent, const std::vector<Perm>& elems);

/// Deterministic small generating set: greedy over sorted elements.
std::vector<Perm> canonical_generators(const Group& g);

/// Stable human-readable label, e.g. "order=4 gens=(1 2)(3 4),(1 3)(2 4)".
std::string subgroup_label(const Group& g);

} // namespace chief
