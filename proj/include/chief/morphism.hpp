#pragma once

#include <map>
#include <memory>

#include "chief/group.hpp"
#include "chief/perm.hpp"

namespace chief {

/// A quotient epimorphism G -> G/N realized by the right-coset action.
///
/// The target is the regular permutation representation of G/N (degree =
/// index of N), so an image element is pinned down by where it sends the
/// coset of the identity. The coset table is built once and cached here.
class Morphism {
public:
  const Group& source() const;
  const Group& target() const;
  const Group& kernel() const;

  /// Image of a source element under the coset action.
  Perm apply(const Perm& g) const;

  /// Image SN/N of a subgroup S of the source.
  Group project(const Group& s) const;

  /// Full preimage of a subgroup T of the target; contains the kernel.
  Group lift(const Group& t) const;

  /// Representative of the coset numbered `index`.
  const Perm& coset_representative(unsigned index) const;

private:
  struct Impl;
  explicit Morphism(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend Morphism quotient_by(const Group& g, const Group& n);
};

/// Quotient of g by a normal subgroup n.
Morphism quotient_by(const Group& g, const Group& n);

} // namespace chief
