#include "chief/chief_series.hpp"

#include <algorithm>
#include <map>

#include "chief/arith.hpp"
#include "chief/context.hpp"
#include "chief/error.hpp"
#include "chief/lattice.hpp"

namespace chief {

std::vector<ChiefFactor> chief_factor_pairs(const Group& g,
                                            const std::vector<Group>& normals) {
  for (const Group& s : normals)
    if (s.degree() != g.degree())
      throw DomainError("chief_factor_pairs: normal subgroup degree mismatch");
  const size_t n = normals.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        leq[i][j] = true;
        continue;
      }
      leq[i][j] = normals[j].order() % normals[i].order() == 0 &&
                  normals[j].order() > normals[i].order() &&
                  normals[j].contains_subgroup(normals[i]);
    }

  std::vector<ChiefFactor> pairs;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j])
        continue;
      // H/K is minimal normal in G/K exactly when no normal subgroup of G
      // lies strictly between K and H.
      bool minimal = true;
      for (size_t k = 0; k < n && minimal; ++k) {
        if (k == i || k == j)
          continue;
        if (leq[i][k] && leq[k][j])
          minimal = false;
      }
      if (!minimal)
        continue;
      ChiefFactor f{normals[i], normals[j],
                    normals[j].order() / normals[i].order(), {}};
      f.pd_primes = prime_divisors(f.factor_order);
      pairs.push_back(std::move(f));
    }
  }
  return pairs;
}

namespace {

// Index of the subgroup equal to `s` in a sorted family, or npos.
size_t index_of(const std::vector<Group>& family, const Group& s) {
  for (size_t i = 0; i < family.size(); ++i)
    if (family[i].order() == s.order() && family[i].same_subgroup(s))
      return i;
  return static_cast<size_t>(-1);
}

} // namespace

SeriesEnumeration chief_series_enumerate(const Group& g,
                                         const std::vector<ChiefFactor>& pairs,
                                         uint64_t limit) {
  // Nodes are the normal subgroups mentioned in the pairs, plus the trivial
  // subgroup and g themselves.
  std::vector<Group> nodes{trivial_subgroup(g)};
  auto node_id = [&](const Group& s) {
    size_t idx = index_of(nodes, s);
    if (idx == static_cast<size_t>(-1)) {
      nodes.push_back(s);
      idx = nodes.size() - 1;
    }
    return idx;
  };
  std::vector<std::vector<std::pair<size_t, size_t>>> out_edges; // node -> (pair idx, to)
  auto ensure_edges = [&] {
    if (out_edges.size() < nodes.size())
      out_edges.resize(nodes.size());
  };
  ensure_edges();
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    size_t from = node_id(pairs[pi].below);
    size_t to = node_id(pairs[pi].above);
    ensure_edges();
    out_edges[from].push_back({pi, to});
  }
  const size_t goal = node_id(g);
  ensure_edges();

  SeriesEnumeration result;
  std::vector<size_t> path_pairs;
  std::vector<size_t> path_nodes{0};

  auto emit = [&] {
    ChiefSeries series;
    for (size_t idx : path_nodes)
      series.terms.push_back(nodes[idx]);
    for (size_t pi : path_pairs)
      series.factors.push_back(pairs[pi]);
    result.series.push_back(std::move(series));
  };

  // Iterative DFS; every maximal chain of normal subgroups through chief
  // pairs is a chief series.
  struct Frame {
    size_t node;
    size_t next_edge = 0;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.node == goal) {
      if (result.series.size() >= limit) {
        result.complete = false;
        break;
      }
      emit();
      stack.pop_back();
      if (!path_pairs.empty()) {
        path_pairs.pop_back();
        path_nodes.pop_back();
      }
      continue;
    }
    if (top.next_edge >= out_edges[top.node].size()) {
      stack.pop_back();
      if (!path_pairs.empty()) {
        path_pairs.pop_back();
        path_nodes.pop_back();
      }
      continue;
    }
    auto [pi, to] = out_edges[top.node][top.next_edge++];
    path_pairs.push_back(pi);
    path_nodes.push_back(to);
    stack.push_back({to, 0});
  }
  return result;
}

SeriesEnumeration chief_series_enumerate(GroupContext& ambient, uint64_t limit) {
  return chief_series_enumerate(ambient.group(), ambient.chief_pairs(), limit);
}

CoverAvoid cover_avoid(const Group& a, const ChiefFactor& f) {
  if (a.degree() != f.above.degree())
    throw DomainError("cover_avoid: mismatched ambient");

  // A covers H/K when H <= AK; AK is a subgroup because K is normal in G.
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), f.below.generators().begin(), f.below.generators().end());
  Group ak = Group::from_generators(a.degree(), std::move(gens));
  bool covers = ak.contains_subgroup(f.above);

  bool avoids = true;
  const Group& small = a.order() <= f.above.order() ? a : f.above;
  const Group& other = a.order() <= f.above.order() ? f.above : a;
  for (const Perm& e : small.elements()) {
    if (other.contains(e) && !f.below.contains(e)) {
      avoids = false;
      break;
    }
  }

  if (covers && avoids && f.factor_order > 1)
    throw Error("internal: cover and avoid both hold on a proper factor");
  if (covers)
    return CoverAvoid::covers;
  if (avoids)
    return CoverAvoid::avoids;
  return CoverAvoid::neither;
}

PcapResult is_pCAP(const Group& a, GroupContext& ambient, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("is_pCAP: p must be prime");
  if (!ambient.group().contains_subgroup(a))
    throw DomainError("is_pCAP: subgroup is not inside the group");
  for (const ChiefFactor& f : ambient.chief_pairs()) {
    if (f.factor_order % p != 0)
      continue;
    if (cover_avoid(a, f) == CoverAvoid::neither)
      return {false, f};
  }
  return {true, std::nullopt};
}

PcapResult is_pCAP(const Group& a, const Group& g, uint64_t p) {
  GroupContext ctx(g);
  return is_pCAP(a, ctx, p);
}

SemiCapResult is_semiCAP(const Group& a, GroupContext& ambient) {
  if (!ambient.group().contains_subgroup(a))
    throw DomainError("is_semiCAP: subgroup is not inside the group");
  const std::vector<Group>& normals = ambient.normals();
  const std::vector<ChiefFactor>& pairs = ambient.chief_pairs();
  const size_t n = normals.size();

  std::vector<std::vector<std::pair<size_t, size_t>>> out_edges(n);
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    size_t from = index_of(normals, pairs[pi].below);
    size_t to = index_of(normals, pairs[pi].above);
    out_edges[from].push_back({pi, to});
  }
  size_t start = index_of(normals, trivial_subgroup(ambient.group()));
  size_t goal = index_of(normals, ambient.group());

  // Memoized search for a chain of covered-or-avoided chief pairs from the
  // trivial subgroup to G; such a chain is exactly a witnessing chief series.
  std::vector<int8_t> state(n, -1); // -1 unknown, 0 bad, 1 good
  std::vector<std::pair<size_t, size_t>> choice(n, {0, 0});
  uint64_t budget = ambient.caps().series_limit;
  bool exhausted = false;

  auto search = [&](auto&& self, size_t node) -> bool {
    if (state[node] >= 0)
      return state[node] == 1;
    if (budget == 0) {
      exhausted = true;
      return false;
    }
    --budget;
    if (node == goal) {
      state[node] = 1;
      return true;
    }
    for (const auto& [pi, to] : out_edges[node]) {
      if (cover_avoid(a, pairs[pi]) == CoverAvoid::neither)
        continue;
      if (self(self, to)) {
        state[node] = 1;
        choice[node] = {pi, to};
        return true;
      }
      if (exhausted)
        return false;
    }
    if (!exhausted)
      state[node] = 0;
    return false;
  };

  bool good = search(search, start);
  if (good) {
    ChiefSeries witness;
    size_t node = start;
    witness.terms.push_back(normals[node]);
    while (node != goal) {
      auto [pi, to] = choice[node];
      witness.factors.push_back(pairs[pi]);
      witness.terms.push_back(normals[to]);
      node = to;
    }
    return {Tri::yes, std::move(witness)};
  }
  if (exhausted)
    return {Tri::unknown, std::nullopt};
  return {Tri::no, std::nullopt};
}

SemiCapResult is_semiCAP(const Group& a, const Group& g) {
  GroupContext ctx(g);
  return is_semiCAP(a, ctx);
}

Group u_hypercenter(GroupContext& ambient) {
  if (ambient.u_hyp_slot())
    return *ambient.u_hyp_slot();
  const Group& g = ambient.group();
  Group z = trivial_subgroup(g);
  for (;;) {
    const Morphism& q = ambient.quotient(z);
    GroupContext& qctx = ambient.quotient_context(z);
    Group layer = trivial_subgroup(q.target());
    for (const Group& m : qctx.minimal_normals())
      if (is_prime(m.order()))
        layer = join(q.target(), layer, m);
    if (layer.is_trivial())
      break;
    z = q.lift(layer);
  }
  ambient.u_hyp_slot() = z;
  return z;
}

Group u_hypercenter(const Group& g) {
  GroupContext ctx(g);
  return u_hypercenter(ctx);
}

Group u_hypercenter_oracle(GroupContext& ambient) {
  if (ambient.u_hyp_oracle_slot())
    return *ambient.u_hyp_oracle_slot();
  const std::vector<Group>& normals = ambient.normals();
  const std::vector<ChiefFactor>& pairs = ambient.chief_pairs();

  // reach[i]: some chief-pair chain from the trivial subgroup to normals[i]
  // has all factors of prime order. By Jordan-Holder, one such chain means
  // every chief series below normals[i] looks like that.
  std::vector<bool> reach(normals.size(), false);
  reach[index_of(normals, trivial_subgroup(ambient.group()))] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ChiefFactor& f : pairs) {
      if (!is_prime(f.factor_order))
        continue;
      size_t from = index_of(normals, f.below);
      size_t to = index_of(normals, f.above);
      if (reach[from] && !reach[to]) {
        reach[to] = true;
        changed = true;
      }
    }
  }

  size_t best = index_of(normals, trivial_subgroup(ambient.group()));
  for (size_t i = 0; i < normals.size(); ++i)
    if (reach[i] && normals[i].order() > normals[best].order())
      best = i;
  for (size_t i = 0; i < normals.size(); ++i)
    if (reach[i] && !normals[best].contains_subgroup(normals[i]))
      throw Error("internal: U-hypercenter candidates are not join-closed");
  ambient.u_hyp_oracle_slot() = normals[best];
  return normals[best];
}

Group u_hypercenter_oracle(const Group& g) {
  GroupContext ctx(g);
  return u_hypercenter_oracle(ctx);
}

} // namespace chief
