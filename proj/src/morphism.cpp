#include "chief/morphism.hpp"

#include <string>

#include "chief/error.hpp"

namespace chief {

struct Morphism::Impl {
  Group source;
  Group target;
  Group kernel;
  std::vector<Perm> reps;            // reps[i] represents coset N * reps[i]
  std::map<Perm, uint32_t> coset_of; // every element of source -> coset index

  Impl(Group src, Group tgt, Group ker) // placeholder; members assigned below
      : source(std::move(src)), target(std::move(tgt)), kernel(std::move(ker)) {}
};

Morphism quotient_by(const Group& g, const Group& n) {
  if (!g.contains_subgroup(n))
    throw DomainError("quotient: subgroup is not inside the group");
  if (!n.is_normal_in(g))
    throw DomainError("quotient: subgroup is not normal");

  const uint64_t index = g.order() / n.order();
  const auto& kernel_elems = n.elements();

  std::vector<Perm> reps;
  std::map<Perm, uint32_t> coset_of;
  auto add_coset = [&](const Perm& rep) {
    uint32_t id = static_cast<uint32_t>(reps.size());
    reps.push_back(rep);
    for (const Perm& k : kernel_elems)
      coset_of.emplace(k * rep, id);
    return id;
  };
  add_coset(Perm(g.degree()));
  for (size_t qi = 0; qi < reps.size(); ++qi) {
    for (const Perm& x : g.generators()) {
      Perm moved = reps[qi] * x;
      if (!coset_of.count(moved))
        add_coset(moved);
    }
  }
  if (reps.size() != index)
    throw Error("internal: coset enumeration found " + std::to_string(reps.size()) +
                " cosets, expected " + std::to_string(index));

  const unsigned qdegree = static_cast<unsigned>(index);
  std::vector<Perm> images;
  for (const Perm& x : g.generators()) {
    std::vector<Point> img(qdegree);
    for (unsigned i = 0; i < qdegree; ++i)
      img[i] = static_cast<Point>(coset_of.at(reps[i] * x));
    images.emplace_back(std::move(img));
  }
  Group target = Group::from_generators(qdegree, std::move(images));
  if (target.order() != index)
    throw Error("internal: quotient action is not faithful on cosets");

  auto impl = std::make_shared<Morphism::Impl>(g, std::move(target), n);
  impl->reps = std::move(reps);
  impl->coset_of = std::move(coset_of);
  return Morphism(std::move(impl));
}

const Group& Morphism::source() const { return impl_->source; }
const Group& Morphism::target() const { return impl_->target; }
const Group& Morphism::kernel() const { return impl_->kernel; }

Perm Morphism::apply(const Perm& g) const {
  if (!impl_->source.contains(g))
    throw DomainError("morphism applied to a non-member");
  const unsigned qdegree = impl_->target.degree();
  std::vector<Point> img(qdegree);
  for (unsigned i = 0; i < qdegree; ++i)
    img[i] = static_cast<Point>(impl_->coset_of.at(impl_->reps[i] * g));
  return Perm(std::move(img));
}

Group Morphism::project(const Group& s) const {
  if (!impl_->source.contains_subgroup(s))
    throw DomainError("project: subgroup is not inside the source");
  std::vector<Perm> images;
  for (const Perm& x : s.generators())
    images.push_back(apply(x));
  return impl_->target.subgroup(std::move(images));
}

Group Morphism::lift(const Group& t) const {
  if (!impl_->target.contains_subgroup(t))
    throw DomainError("lift: subgroup is not inside the target");
  std::vector<Perm> gens = impl_->kernel.generators();
  // The target acts regularly on cosets, so a target element is determined
  // by the image of coset 0 and reps[t[0]] is a preimage of t.
  for (const Perm& x : t.generators())
    gens.push_back(impl_->reps[x[0]]);
  return impl_->source.subgroup(std::move(gens));
}

const Perm& Morphism::coset_representative(unsigned index) const {
  return impl_->reps.at(index);
}

} // namespace chief
