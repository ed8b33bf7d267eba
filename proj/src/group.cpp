#include "chief/group.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <utility>

#include "chief/caps.hpp"
#include "chief/error.hpp"

namespace chief {

namespace {

struct Level {
  unsigned point = 0;
  std::vector<Perm> gens;          // strong generators fixing base[0..i-1]
  std::vector<int32_t> slot;       // slot[p] = index into transversal, or -1
  std::vector<Perm> transversal;   // transversal[slot[p]] maps point -> p
  std::vector<unsigned> orbit;     // discovery order
};

// Deterministic Schreier-Sims. Orbits are explored breadth-first in point
// order and generators in insertion order, so identical input yields an
// identical chain.
struct Chain {
  unsigned degree = 0;
  std::vector<Level> levels;

  void rebuild_orbit(size_t i) {
    Level& level = levels[i];
    level.slot.assign(degree, -1);
    level.transversal.clear();
    level.orbit.clear();
    level.slot[level.point] = 0;
    level.transversal.emplace_back(degree);
    level.orbit.push_back(level.point);
    for (size_t qi = 0; qi < level.orbit.size(); ++qi) {
      unsigned p = level.orbit[qi];
      Perm u = level.transversal[static_cast<size_t>(level.slot[p])];
      for (const Perm& s : level.gens) {
        unsigned q = s[p];
        if (level.slot[q] < 0) {
          level.slot[q] = static_cast<int32_t>(level.transversal.size());
          level.transversal.push_back(u * s);
          level.orbit.push_back(q);
        }
      }
    }
  }

  std::pair<size_t, Perm> strip(Perm g, size_t from) const {
    for (size_t i = from; i < levels.size(); ++i) {
      unsigned p = g[levels[i].point];
      int32_t s = levels[i].slot[p];
      if (s < 0)
        return {i, std::move(g)};
      g = g * levels[i].transversal[static_cast<size_t>(s)].inverse();
    }
    return {levels.size(), std::move(g)};
  }

  void append_level(const Perm& witness) {
    for (unsigned p = 0; p < degree; ++p) {
      if (witness[p] != p) {
        Level level;
        level.point = p;
        levels.push_back(std::move(level));
        return;
      }
    }
    throw Error("internal: identity witness for new level");
  }

  void complete_level(size_t i) {
    rebuild_orbit(i);
    for (size_t oi = 0; oi < levels[i].orbit.size(); ++oi) {
      for (size_t si = 0; si < levels[i].gens.size(); ++si) {
        unsigned p = levels[i].orbit[oi];
        Perm u = levels[i].transversal[static_cast<size_t>(levels[i].slot[p])];
        Perm s = levels[i].gens[si];
        unsigned q = s[p];
        Perm schreier =
            u * s * levels[i].transversal[static_cast<size_t>(levels[i].slot[q])].inverse();
        if (schreier.is_identity())
          continue;
        auto [lvl, residue] = strip(std::move(schreier), i + 1);
        if (residue.is_identity())
          continue;
        if (lvl == levels.size())
          append_level(residue);
        for (size_t k = i + 1; k <= lvl; ++k)
          levels[k].gens.push_back(residue);
        for (size_t j = lvl; j > i; --j)
          complete_level(j);
      }
    }
  }

  void build(const std::vector<Perm>& gens) {
    levels.clear();
    std::vector<Perm> seed;
    for (const Perm& g : gens)
      if (!g.is_identity())
        seed.push_back(g);
    if (seed.empty())
      return;
    append_level(seed.front());
    levels[0].gens = std::move(seed);
    complete_level(0);
  }

  uint64_t order() const {
    uint64_t n = 1;
    for (const Level& level : levels)
      n *= level.transversal.size();
    return n;
  }

  bool contains(const Perm& g) const {
    auto [lvl, residue] = strip(g, 0);
    (void)lvl;
    return residue.is_identity();
  }
};

constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

} // namespace

struct Group::Impl {
  unsigned degree = 0;
  std::vector<Perm> gens;
  Chain chain;
  std::vector<unsigned> base_points;
  std::vector<Perm> strong;
  uint64_t order = 1;
  std::shared_ptr<const Impl> parent;

  mutable std::once_flag elements_once;
  mutable std::vector<Perm> elements;
  mutable uint64_t hash = 0;

  void enumerate() const {
    std::call_once(elements_once, [this] {
      std::vector<Perm> out;
      out.reserve(order);
      Perm acc(degree);
      collect(chain.levels.size(), acc, out);
      std::sort(out.begin(), out.end());
      uint64_t h = kFnvOffset;
      for (const Perm& e : out)
        for (Point p : e.images()) {
          h ^= static_cast<uint64_t>(p) + 1;
          h *= kFnvPrime;
        }
      elements = std::move(out);
      hash = h;
    });
  }

  // elements(i) = { h * u : h in elements(i+1), u in transversal(i) },
  // unwound from the deepest level outwards.
  void collect(size_t levels_left, const Perm& acc, std::vector<Perm>& out) const {
    if (levels_left == 0) {
      out.push_back(acc);
      return;
    }
    size_t i = levels_left - 1;
    for (const Perm& u : chain.levels[i].transversal)
      collect(i, acc * u, out);
  }
};

Group Group::from_generators(unsigned degree, std::vector<Perm> gens) {
  if (degree == 0)
    throw DomainError("group degree must be positive");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw DomainError("generator degree mismatch");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->gens = std::move(gens);
  impl->chain.degree = degree;
  impl->chain.build(impl->gens);
  impl->order = impl->chain.order();
  if (impl->order > global_caps().max_order)
    throw CapExceeded("group order " + std::to_string(impl->order) +
                      " exceeds max_order cap " +
                      std::to_string(global_caps().max_order));
  for (const Level& level : impl->chain.levels) {
    impl->base_points.push_back(level.point);
    for (const Perm& s : level.gens)
      if (std::find(impl->strong.begin(), impl->strong.end(), s) == impl->strong.end())
        impl->strong.push_back(s);
  }
  return Group(std::move(impl));
}

Group Group::subgroup(std::vector<Perm> gens) const {
  for (const Perm& g : gens)
    if (!contains(g))
      throw DomainError("subgroup generator is not a member of the ambient group");
  Group sub = from_generators(degree(), std::move(gens));
  auto impl = std::const_pointer_cast<Impl>(sub.impl_);
  impl->parent = impl_;
  return sub;
}

unsigned Group::degree() const { return impl_->degree; }
uint64_t Group::order() const { return impl_->order; }
const std::vector<Perm>& Group::generators() const { return impl_->gens; }
const std::vector<Perm>& Group::strong_generators() const { return impl_->strong; }
const std::vector<unsigned>& Group::base() const { return impl_->base_points; }

bool Group::contains(const Perm& p) const {
  if (p.degree() != impl_->degree)
    throw DomainError("degree mismatch in membership test");
  return impl_->chain.contains(p);
}

bool Group::contains_subgroup(const Group& sub) const {
  if (sub.degree() != degree())
    throw DomainError("degree mismatch in subgroup test");
  for (const Perm& g : sub.generators())
    if (!contains(g))
      return false;
  return true;
}

bool Group::same_subgroup(const Group& other) const {
  return degree() == other.degree() && order() == other.order() &&
         contains_subgroup(other);
}

bool Group::is_abelian() const {
  const auto& gens = generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool Group::is_normal_in(const Group& g) const {
  for (const Perm& outer : g.generators())
    for (const Perm& inner : generators())
      if (!contains(conjugate(inner, outer)))
        return false;
  return true;
}

const std::vector<Perm>& Group::elements() const {
  impl_->enumerate();
  return impl_->elements;
}

uint64_t Group::element_hash() const {
  impl_->enumerate();
  return impl_->hash;
}

Perm Group::random_element(std::mt19937& rng) const {
  Perm e(degree());
  const auto& levels = impl_->chain.levels;
  for (size_t i = levels.size(); i-- > 0;) {
    const auto& tr = levels[i].transversal;
    e = e * tr[rng() % tr.size()];
  }
  return e;
}

bool Group::has_parent() const { return impl_->parent != nullptr; }

Group Group::parent() const {
  if (!impl_->parent)
    throw DomainError("group has no parent");
  return Group(impl_->parent);
}

const void* Group::impl_id() const { return impl_.get(); }

Group trivial_subgroup(const Group& g) { return g.subgroup({}); }

Group join(const Group& g, const Group& a, const Group& b) {
  if (!g.contains_subgroup(a) || !g.contains_subgroup(b))
    throw DomainError("join operand is not inside the ambient group");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return g.subgroup(std::move(gens));
}

Group intersect(const Group& a, const Group& b) {
  if (a.degree() != b.degree())
    throw DomainError("degree mismatch in intersection");
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& big = a.order() <= b.order() ? b : a;
  const Group ambient = a.has_parent() ? a.parent() : a;
  std::vector<Perm> found;
  for (const Perm& e : small.elements())
    if (big.contains(e))
      found.push_back(e);
  return generated_subgroup(ambient, found);
}

Group normal_closure(const Group& g, const Group& s) {
  if (!g.contains_subgroup(s))
    throw DomainError("normal closure operand is not inside the ambient group");
  std::vector<Perm> gens;
  for (const Perm& x : s.generators())
    if (!x.is_identity())
      gens.push_back(x);
  Group closure = g.subgroup(gens);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> current = closure.generators();
    for (const Perm& n : current) {
      for (const Perm& o : g.generators()) {
        Perm c = conjugate(n, o);
        if (!closure.contains(c)) {
          gens.push_back(c);
          closure = g.subgroup(gens);
          changed = true;
        }
      }
    }
  }
  return closure;
}

Group commutator_subgroup(const Group& h, const Group& g) {
  if (!g.contains_subgroup(h))
    throw DomainError("commutator operand is not inside the ambient group");
  std::vector<Perm> comms;
  for (const Perm& a : h.generators())
    for (const Perm& b : g.generators()) {
      Perm c = commutator(a, b);
      if (!c.is_identity())
        comms.push_back(c);
    }
  return normal_closure(g, g.subgroup(std::move(comms)));
}

std::vector<std::vector<Perm>> conjugacy_classes(const Group& g) {
  const auto& elems = g.elements();
  std::vector<bool> used(elems.size(), false);
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    return static_cast<size_t>(it - elems.begin());
  };
  std::vector<std::vector<Perm>> classes;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (used[i])
      continue;
    std::vector<Perm> cls{elems[i]};
    used[i] = true;
    for (size_t qi = 0; qi < cls.size(); ++qi) {
      Perm cur = cls[qi];
      for (const Perm& o : g.generators()) {
        Perm c = conjugate(cur, o);
        size_t idx = index_of(c);
        if (!used[idx]) {
          used[idx] = true;
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Group generated_subgroup(const Group& parent, const std::vector<Perm>& elems) {
  std::vector<Perm> gens;
  Group cur = parent.subgroup({});
  for (const Perm& e : elems) {
    if (!cur.contains(e)) {
      gens.push_back(e);
      cur = parent.subgroup(gens);
    }
  }
  return cur;
}

std::vector<Perm> canonical_generators(const Group& g) {
  std::vector<Perm> gens;
  const Group ambient = g.has_parent() ? g.parent() : g;
  Group cur = ambient.subgroup({});
  for (const Perm& e : g.elements()) {
    if (cur.order() == g.order())
      break;
    if (!cur.contains(e)) {
      gens.push_back(e);
      cur = ambient.subgroup(gens);
    }
  }
  return gens;
}

std::string subgroup_label(const Group& g) {
  std::ostringstream os;
  os << "order=" << g.order() << " gens=";
  const auto gens = canonical_generators(g);
  if (gens.empty()) {
    os << "()";
  } else {
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i)
        os << ',';
      os << gens[i].str();
    }
  }
  return os.str();
}

} // namespace chief
