#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "chief/arith.hpp"
#include "chief/catalogue.hpp"
#include "chief/caps.hpp"
#include "chief/error.hpp"
#include "chief/lattice.hpp"
#include "oracles.hpp"

using namespace chief;

namespace {

std::multiset<uint64_t> orders_of(const std::vector<Group>& subs) {
  std::multiset<uint64_t> out;
  for (const Group& s : subs)
    out.insert(s.order());
  return out;
}

size_t count_conjugates(const Group& g, const Group& s) {
  std::set<std::vector<Perm>> seen;
  for (const Perm& e : g.elements()) {
    std::vector<Perm> gens;
    for (const Perm& x : s.generators())
      gens.push_back(conjugate(x, e));
    seen.insert(g.subgroup(gens).elements());
  }
  return seen.size();
}

} // namespace

TEST_CASE("subgroup counts match the closure-pair oracle") {
  for (const char* name : {"C6", "S4", "Q8", "D8", "A4", "SL23", "C3:C4"}) {
    Group g = builtin_group(name);
    SubgroupLattice lat = all_subgroups(g);
    auto sets = oracle::all_subgroup_sets(g.degree(), g.elements());
    CHECK(lat.subgroups.size() == sets.size());
    for (const Group& s : lat.subgroups)
      CHECK(sets.count(s.elements()) == 1);
  }
  CHECK(all_subgroups(builtin_group("C6")).subgroups.size() == 4);
  CHECK(all_subgroups(builtin_group("S4")).subgroups.size() == 30);
  CHECK(all_subgroups(builtin_group("Q8")).subgroups.size() == 6);
}

TEST_CASE("subgroup counts of A5 and S5 match the literature") {
  CHECK(all_subgroups(builtin_group("A5")).subgroups.size() == 59);
  CHECK(all_subgroups(builtin_group("S5")).subgroups.size() == 156);
}

TEST_CASE("subgroup counts of dihedral and 2-group builtins") {
  // dihedral of order 2n has d(n) + sigma(n) subgroups
  CHECK(all_subgroups(builtin_group("D24")).subgroups.size() == 34); // 6 + 28
  CHECK(all_subgroups(builtin_group("D16")).subgroups.size() == 19); // 4 + 15
  CHECK(all_subgroups(builtin_group("Q16")).subgroups.size() == 11);
  CHECK(all_subgroups(builtin_group("M16")).subgroups.size() == 11);
}

TEST_CASE("lattice respects Lagrange and contains the extremes") {
  for (const char* name : {"S4", "Q8", "C12", "A4"}) {
    Group g = builtin_group(name);
    SubgroupLattice lat = all_subgroups(g);
    bool has_trivial = false, has_full = false;
    for (const Group& s : lat.subgroups) {
      CHECK(g.order() % s.order() == 0);
      has_trivial |= s.is_trivial();
      has_full |= s.order() == g.order();
    }
    CHECK(has_trivial);
    CHECK(has_full);
  }
}

TEST_CASE("lattice is closed under join and intersection (sampled)") {
  Group g = builtin_group("S4");
  SubgroupLattice lat = all_subgroups(g);
  auto member = [&](const Group& s) {
    for (const Group& t : lat.subgroups)
      if (t.order() == s.order() && t.same_subgroup(s))
        return true;
    return false;
  };
  for (size_t i = 0; i < lat.subgroups.size(); i += 5)
    for (size_t j = i; j < lat.subgroups.size(); j += 7) {
      CHECK(member(join(g, lat.subgroups[i], lat.subgroups[j])));
      CHECK(member(intersect(lat.subgroups[i], lat.subgroups[j])));
    }
}

TEST_CASE("lattice cap raises CapExceeded") {
  Caps saved = global_caps();
  global_caps().lattice_cap = 10;
  CHECK_THROWS_AS(all_subgroups(builtin_group("S4")), CapExceeded);
  global_caps() = saved;
}

TEST_CASE("pathological abelian inputs fail fast instead of grinding") {
  // E64 has 2825 subgroups, all normal; the join work cap kicks in
  CHECK_THROWS_AS(normal_subgroups(builtin_group("E64")), CapExceeded);
}

TEST_CASE("normal subgroups: fast path agrees with the lattice filter") {
  for (const char* name : {"S4", "SL23", "D12", "A4", "C12", "Q8", "C7:C3"}) {
    Group g = builtin_group(name);
    auto normals = normal_subgroups(g);
    SubgroupLattice lat = all_subgroups(g);
    std::vector<Group> filtered;
    for (size_t i = 0; i < lat.subgroups.size(); ++i)
      if (lat.normal_index[i])
        filtered.push_back(lat.subgroups[i]);
    REQUIRE(normals.size() == filtered.size());
    for (size_t i = 0; i < normals.size(); ++i)
      CHECK(normals[i].same_subgroup(filtered[i]));
  }
}

TEST_CASE("normal subgroups of S4 and SL23 are the classical ones") {
  CHECK(orders_of(normal_subgroups(builtin_group("S4"))) ==
        std::multiset<uint64_t>{1, 4, 12, 24});
  CHECK(orders_of(normal_subgroups(builtin_group("SL23"))) ==
        std::multiset<uint64_t>{1, 2, 8, 24});
  Group c12 = builtin_group("C12");
  CHECK(normal_subgroups(c12).size() == all_subgroups(c12).subgroups.size());
}

TEST_CASE("maximal subgroups") {
  CHECK(orders_of(maximal_subgroups(builtin_group("C5"))) ==
        std::multiset<uint64_t>{1});
  CHECK(orders_of(maximal_subgroups(builtin_group("S4"))) ==
        std::multiset<uint64_t>{6, 6, 6, 6, 8, 8, 8, 12});
  CHECK(orders_of(maximal_subgroups(builtin_group("Q8"))) ==
        std::multiset<uint64_t>{4, 4, 4});
}

TEST_CASE("minimal normal subgroups") {
  Group a5 = builtin_group("A5");
  auto mins = minimal_normal_subgroups(a5);
  REQUIRE(mins.size() == 1);
  CHECK(mins.front().order() == 60);

  auto s4_mins = minimal_normal_subgroups(builtin_group("S4"));
  REQUIRE(s4_mins.size() == 1);
  CHECK(s4_mins.front().order() == 4);

  CHECK(minimal_normal_subgroups(builtin_group("E4")).size() == 3);
  CHECK_THROWS_AS(minimal_normal_subgroups(builtin_group("C2").subgroup({})),
                  DomainError);
}

TEST_CASE("sylow subgroups") {
  Group s4 = builtin_group("S4");
  CHECK(sylow_subgroup(s4, 5).is_trivial());
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(builtin_group("SL23"), 3).order() == 3);
  CHECK_THROWS_AS(sylow_subgroup(s4, 6), DomainError);

  // Sylow counts: congruent to 1 mod p and dividing the cofactor.
  for (const char* name : {"S4", "A4", "SL23", "D12", "C7:C3"}) {
    Group g = builtin_group(name);
    for (uint64_t p : prime_divisors(g.order())) {
      Group syl = sylow_subgroup(g, p);
      CHECK(syl.order() == p_part(g.order(), p));
      size_t count = count_conjugates(g, syl);
      CHECK(count % p == 1);
      CHECK((g.order() / syl.order()) % count == 0);
    }
  }
}

TEST_CASE("centralizer and normalizer") {
  Group s4 = builtin_group("S4");
  Group a4 = s4.subgroup({Perm::parse("(1 2 3)", 4), Perm::parse("(1 2)(3 4)", 4)});
  CHECK(normalizer(s4, a4).same_subgroup(s4));
  CHECK(centralizer(s4, center(s4)).same_subgroup(s4));
  Group syl3 = sylow_subgroup(s4, 3);
  CHECK(normalizer(s4, syl3).order() == 6);
}

TEST_CASE("characteristic subgroups: classical values") {
  Group s3 = builtin_group("S3");
  CHECK(center(s3).is_trivial());
  CHECK(fitting_subgroup(s3).order() == 3);

  Group q8 = builtin_group("Q8");
  CHECK(frattini_subgroup(q8).order() == 2);
  CHECK(frattini_subgroup(q8).same_subgroup(center(q8)));

  Group s4 = builtin_group("S4");
  CHECK(p_residual(s4, 2).order() == 12);
  CHECK(fitting_subgroup(s4).order() == 4);
  CHECK(hypercenter(s4).is_trivial());
  CHECK(derived_subgroup(s4).order() == 12);
  CHECK(p_core(s4, 2).order() == 4);
  CHECK(p_prime_core(s4, 2).order() == 1);
  CHECK(p_prime_core(s3, 2).order() == 3);
  CHECK(p_prime_core(s3, 3).order() == 1);

  Group d8 = builtin_group("D8");
  CHECK(hypercenter(d8).same_subgroup(d8));

  // p-group Frattini: intersection of maximals equals derived * p-th powers.
  for (const char* name : {"Q8", "D8", "E8", "M16", "Q16"}) {
    Group g = builtin_group(name);
    Group phi = frattini_subgroup(g);
    std::vector<Perm> gens = derived_subgroup(g).generators();
    for (const Perm& e : g.elements())
      gens.push_back(e * e);
    CHECK(phi.same_subgroup(generated_subgroup(g, gens)));
  }
}

TEST_CASE("layer and generalized Fitting subgroup") {
  Group s4 = builtin_group("S4");
  CHECK(layer_subgroup(s4).is_trivial());
  CHECK(generalized_fitting(s4).same_subgroup(fitting_subgroup(s4)));

  Group a5 = builtin_group("A5");
  CHECK(layer_subgroup(a5).same_subgroup(a5));
  CHECK(generalized_fitting(a5).same_subgroup(a5));

  Group s5 = builtin_group("S5");
  CHECK(layer_subgroup(s5).order() == 60);
  CHECK(generalized_fitting(s5).order() == 60);

  // F* = F for solvable groups; F* contains F always.
  for (const char* name : {"S4", "D12", "SL23", "A5"}) {
    Group g = builtin_group(name);
    Group f = fitting_subgroup(g);
    Group fstar = generalized_fitting(g);
    CHECK(fstar.contains_subgroup(f));
    CHECK(is_nilpotent(f));
    CHECK(frattini_subgroup(g).is_normal_in(g));
    if (is_solvable(g))
      CHECK(fstar.same_subgroup(f));
  }
}

TEST_CASE("group class predicates") {
  CHECK(is_nilpotent(builtin_group("Q8")));
  CHECK_FALSE(is_nilpotent(builtin_group("S3")));
  CHECK(is_solvable(builtin_group("S4")));
  CHECK_FALSE(is_solvable(builtin_group("A5")));
  CHECK(is_supersolvable(builtin_group("S3")));
  CHECK(is_supersolvable(builtin_group("D8")));
  CHECK_FALSE(is_supersolvable(builtin_group("S4")));
  CHECK_FALSE(is_supersolvable(builtin_group("A4")));

  CHECK(is_p_nilpotent(builtin_group("S3"), 2));
  CHECK_FALSE(is_p_nilpotent(builtin_group("S4"), 2));
  CHECK(is_p_nilpotent(builtin_group("SL23"), 3));
  CHECK_THROWS_AS(is_p_nilpotent(builtin_group("S3"), 4), DomainError);
}

TEST_CASE("nilpotency via the hypercenter agrees with normal Sylows") {
  for (const char* name : {"Q8", "D8", "M16", "C12", "S3", "S4", "A4", "SL23",
                           "D12", "C7:C3", "C3:C4", "E27", "C2xQ8"}) {
    Group g = builtin_group(name);
    bool all_sylows_normal = true;
    for (uint64_t p : prime_divisors(g.order()))
      all_sylows_normal &= sylow_subgroup(g, p).is_normal_in(g);
    CHECK_MESSAGE(is_nilpotent(g) == all_sylows_normal, name);
  }
}

TEST_CASE("p-nilpotency via O^p agrees with normal-complement search") {
  for (const char* name : {"S3", "S4", "A4", "SL23", "D12", "Q8", "C7:C3", "C12"}) {
    Group g = builtin_group(name);
    for (uint64_t p : prime_divisors(g.order())) {
      bool via_residual = is_p_nilpotent(g, p);
      bool via_complement = false;
      const uint64_t complement_order = g.order() / p_part(g.order(), p);
      for (const Group& n : normal_subgroups(g))
        if (n.order() == complement_order && n.order() % p != 0)
          via_complement = true;
      CHECK(via_residual == via_complement);
    }
  }
}

TEST_CASE("exponent") {
  CHECK(exponent(builtin_group("Q8")) == 4);
  CHECK(exponent(builtin_group("E4")) == 2);
  CHECK(exponent(builtin_group("S4")) == 12);
}
