#include "chief/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "chief/arith.hpp"
#include "chief/caps.hpp"
#include "chief/chief_series.hpp"
#include "chief/error.hpp"
#include "chief/morphism.hpp"

namespace chief {

namespace {

// Closing a lattice can blow up on pathological input (large elementary
// abelian groups); these guards turn that into a clean error instead of
// minutes of grinding.
constexpr size_t kSubgroupCountGuard = 20000;
constexpr size_t kJoinWorkGuard = 500000;

bool subgroup_less(const Group& a, const Group& b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end());
}

// Deduplicating set of subgroups, bucketed by (order, element hash) with an
// exact same_subgroup check on collision.
class SubgroupSet {
public:
  bool insert(const Group& g) {
    auto& bucket = buckets_[{g.order(), g.element_hash()}];
    for (size_t idx : bucket)
      if (items_[idx].same_subgroup(g))
        return false;
    bucket.push_back(items_.size());
    items_.push_back(g);
    if (items_.size() > kSubgroupCountGuard)
      throw CapExceeded("subgroup enumeration exceeded " +
                        std::to_string(kSubgroupCountGuard) + " subgroups");
    return true;
  }

  const std::vector<Group>& items() const { return items_; }

private:
  std::map<std::pair<uint64_t, uint64_t>, std::vector<size_t>> buckets_;
  std::vector<Group> items_;
};

} // namespace

void sort_subgroups(std::vector<Group>& subs) {
  std::sort(subs.begin(), subs.end(), subgroup_less);
}

SubgroupLattice all_subgroups(const Group& g) {
  if (g.order() > global_caps().lattice_cap)
    throw CapExceeded("group order " + std::to_string(g.order()) +
                      " exceeds lattice cap " +
                      std::to_string(global_caps().lattice_cap));

  SubgroupSet seen;
  std::vector<Group> frontier;
  auto add = [&](const Group& s) {
    if (seen.insert(s))
      frontier.push_back(s);
  };

  add(trivial_subgroup(g));
  for (const Perm& e : g.elements())
    if (!e.is_identity())
      add(g.subgroup({e}));

  // Close under pairwise joins: every subgroup is an iterated join of cyclic
  // subgroups, so the fixpoint is the full lattice.
  size_t work = 0;
  while (!frontier.empty()) {
    std::vector<Group> fresh = std::move(frontier);
    frontier.clear();
    const std::vector<Group> known = seen.items();
    for (const Group& a : known) {
      for (const Group& b : fresh) {
        if (a.order() == g.order() || b.order() == g.order())
          continue;
        if (a.contains_subgroup(b) || b.contains_subgroup(a))
          continue;
        if (++work > kJoinWorkGuard)
          throw CapExceeded("subgroup enumeration exceeded the join work cap");
        add(join(g, a, b));
      }
    }
  }

  SubgroupLattice lattice{g, seen.items(), {}, {}};
  sort_subgroups(lattice.subgroups);

  const size_t n = lattice.subgroups.size();
  lattice.normal_index.resize(n);
  lattice.maximal_index.resize(n);
  for (size_t i = 0; i < n; ++i)
    lattice.normal_index[i] = lattice.subgroups[i].is_normal_in(g);
  for (size_t i = 0; i < n; ++i) {
    const Group& s = lattice.subgroups[i];
    if (s.order() == g.order()) {
      lattice.maximal_index[i] = false;
      continue;
    }
    bool maximal = true;
    for (size_t j = 0; j < n && maximal; ++j) {
      const Group& t = lattice.subgroups[j];
      if (t.order() <= s.order() || t.order() == g.order())
        continue;
      if (t.order() % s.order() == 0 && t.contains_subgroup(s))
        maximal = false;
    }
    lattice.maximal_index[i] = maximal;
  }
  return lattice;
}

std::vector<Group> normal_subgroups(const Group& g) {
  SubgroupSet seen;
  std::vector<Group> frontier;
  auto add = [&](const Group& s) {
    if (seen.insert(s))
      frontier.push_back(s);
  };
  add(trivial_subgroup(g));
  // Normal closures of single elements, one per conjugacy class; every
  // normal subgroup is a join of these.
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front().is_identity())
      continue;
    add(normal_closure(g, g.subgroup({cls.front()})));
  }
  size_t work = 0;
  while (!frontier.empty()) {
    std::vector<Group> fresh = std::move(frontier);
    frontier.clear();
    const std::vector<Group> known = seen.items();
    for (const Group& a : known)
      for (const Group& b : fresh) {
        if (a.contains_subgroup(b) || b.contains_subgroup(a))
          continue;
        if (++work > kJoinWorkGuard)
          throw CapExceeded("normal subgroup enumeration exceeded the join work cap");
        add(join(g, a, b));
      }
  }
  std::vector<Group> normals = seen.items();
  sort_subgroups(normals);
  return normals;
}

std::vector<Group> maximal_subgroups(const Group& g) {
  SubgroupLattice lattice = all_subgroups(g);
  std::vector<Group> out;
  for (size_t i = 0; i < lattice.subgroups.size(); ++i)
    if (lattice.maximal_index[i])
      out.push_back(lattice.subgroups[i]);
  return out;
}

std::vector<Group> minimal_normal_subgroups(const Group& g) {
  if (g.is_trivial())
    throw DomainError("minimal normal subgroups of the trivial group");
  std::vector<Group> normals = normal_subgroups(g);
  std::vector<Group> out;
  for (const Group& n : normals) {
    if (n.is_trivial())
      continue;
    bool minimal = true;
    for (const Group& m : normals) {
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
  return out;
}

Group sylow_subgroup(const Group& g, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const uint64_t target = p_part(g.order(), p);
  Group sylow = trivial_subgroup(g);
  while (sylow.order() < target) {
    // Any p-element of the normalizer outside the current subgroup extends it;
    // one exists because p divides |N/P| while P is not yet full.
    Group norm = normalizer(g, sylow);
    bool grown = false;
    for (const Perm& e : norm.elements()) {
      if (e.is_identity() || sylow.contains(e))
        continue;
      uint64_t o = e.order();
      if (p_part(o, p) != o)
        continue;
      std::vector<Perm> gens = sylow.generators();
      gens.push_back(e);
      sylow = g.subgroup(std::move(gens));
      grown = true;
      break;
    }
    if (!grown)
      throw Error("internal: sylow growth stalled");
  }
  return sylow;
}

Group centralizer(const Group& g, const Group& s) {
  if (!g.contains_subgroup(s))
    throw DomainError("centralizer: subgroup is not inside the group");
  std::vector<Perm> found;
  for (const Perm& e : g.elements()) {
    bool central = true;
    for (const Perm& x : s.generators())
      if (e * x != x * e) {
        central = false;
        break;
      }
    if (central)
      found.push_back(e);
  }
  return generated_subgroup(g, found);
}

Group normalizer(const Group& g, const Group& s) {
  if (!g.contains_subgroup(s))
    throw DomainError("normalizer: subgroup is not inside the group");
  std::vector<Perm> found;
  for (const Perm& e : g.elements()) {
    bool normalizes = true;
    for (const Perm& x : s.generators())
      if (!s.contains(conjugate(x, e))) {
        normalizes = false;
        break;
      }
    if (normalizes)
      found.push_back(e);
  }
  return generated_subgroup(g, found);
}

Group center(const Group& g) { return centralizer(g, g); }

Group derived_subgroup(const Group& g) { return commutator_subgroup(g, g); }

Group frattini_subgroup(const Group& g) {
  Group phi = g;
  for (const Group& m : maximal_subgroups(g))
    phi = intersect(phi, m);
  return phi;
}

Group p_core(const Group& g, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("p_core: p must be prime");
  // Normal p-subgroups are closed under join, so the largest one by order
  // contains all others.
  Group best = trivial_subgroup(g);
  for (const Group& n : normal_subgroups(g)) {
    if (p_part(n.order(), p) != n.order())
      continue;
    if (n.order() > best.order())
      best = n;
  }
  return best;
}

Group p_prime_core(const Group& g, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("p_prime_core: p must be prime");
  Group best = trivial_subgroup(g);
  for (const Group& n : normal_subgroups(g)) {
    if (n.order() % p == 0)
      continue;
    if (n.order() > best.order())
      best = n;
  }
  return best;
}

Group p_residual(const Group& g, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("p_residual: p must be prime");
  std::vector<Perm> coprime;
  for (const Perm& e : g.elements())
    if (e.order() % p != 0)
      coprime.push_back(e);
  return generated_subgroup(g, coprime);
}

Group fitting_subgroup(const Group& g) {
  Group f = trivial_subgroup(g);
  for (uint64_t p : prime_divisors(g.order()))
    f = join(g, f, p_core(g, p));
  return f;
}

Group hypercenter(const Group& g) {
  Group z = trivial_subgroup(g);
  for (;;) {
    Morphism q = quotient_by(g, z);
    Group zq = center(q.target());
    if (zq.is_trivial())
      return z;
    z = q.lift(zq);
  }
}

namespace {

bool is_subnormal(const Group& g, const Group& s) {
  Group t = g;
  for (;;) {
    if (t.same_subgroup(s))
      return true;
    Group next = normal_closure(t, t.subgroup(s.generators()));
    if (next.order() == t.order())
      return false;
    t = next;
  }
}

bool is_quasisimple(const Group& s) {
  if (s.order() == 1 || s.is_abelian())
    return false;
  if (!derived_subgroup(s).same_subgroup(s))
    return false;
  Group q = quotient_by(s, center(s)).target();
  if (q.order() == 1)
    return false;
  return normal_subgroups(q).size() == 2;
}

} // namespace

Group layer_subgroup(const Group& g) {
  if (is_solvable(g))
    return trivial_subgroup(g);
  Group e = trivial_subgroup(g);
  for (const Group& s : all_subgroups(g).subgroups) {
    if (s.order() < 60)
      continue; // no quasisimple group is smaller
    if (is_quasisimple(s) && is_subnormal(g, s))
      e = join(g, e, s);
  }
  return e;
}

Group generalized_fitting(const Group& g) {
  Group f = fitting_subgroup(g);
  if (is_solvable(g))
    return f;
  return join(g, f, layer_subgroup(g));
}

bool is_nilpotent(const Group& g) { return hypercenter(g).order() == g.order(); }

bool is_solvable(const Group& g) {
  Group d = g;
  for (;;) {
    if (d.is_trivial())
      return true;
    Group next = commutator_subgroup(d, d);
    if (next.order() == d.order())
      return false;
    d = next;
  }
}

bool is_supersolvable(const Group& g) {
  for (const ChiefFactor& f : chief_factor_pairs(g, normal_subgroups(g)))
    if (!is_prime(f.factor_order))
      return false;
  return true;
}

bool is_p_nilpotent(const Group& g, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("is_p_nilpotent: p must be prime");
  return p_residual(g, p).order() % p != 0;
}

uint64_t exponent(const Group& g) {
  uint64_t e = 1;
  for (const Perm& x : g.elements())
    e = std::lcm(e, x.order());
  return e;
}

} // namespace chief
