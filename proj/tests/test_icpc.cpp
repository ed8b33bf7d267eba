#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chief/arith.hpp"
#include "chief/catalogue.hpp"
#include "chief/chief_series.hpp"
#include "chief/context.hpp"
#include "chief/error.hpp"
#include "chief/icpc.hpp"
#include "chief/lattice.hpp"

using namespace chief;

namespace {

Group sub(const Group& g, const std::vector<std::string>& gens) {
  std::vector<Perm> perms;
  for (const auto& s : gens)
    perms.push_back(Perm::parse(s, g.degree()));
  return g.subgroup(std::move(perms));
}

} // namespace

TEST_CASE("ICPhi: abelian ambients, S3, and the V4-in-A4 counterexample") {
  Group c6 = builtin_group("C6");
  GroupContext cctx(c6);
  for (const Group& h : all_subgroups(c6).subgroups)
    CHECK(is_ICPhi(h, cctx));

  Group s3 = builtin_group("S3");
  GroupContext sctx(s3);
  CHECK(is_ICPhi(sub(s3, {"(1 2)"}), sctx));

  Group a4 = builtin_group("A4");
  GroupContext actx(a4);
  Group v4 = sub(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK_FALSE(is_ICPhi(v4, actx));
}

TEST_CASE("ICPC: spec examples") {
  Group s3 = builtin_group("S3");
  GroupContext sctx(s3);
  IcpcResult r = is_ICPC(sub(s3, {"(1 2)"}), sctx, 2);
  CHECK(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->is_trivial()); // trivial intersection, trivial witness

  Group sl23 = builtin_group("SL23");
  GroupContext lctx(sl23);
  Group i4 = sub(sl23, {"(1 3 2 6)(4 5 8 7)"});
  IcpcResult bad = is_ICPC(i4, lctx, 2);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.certificate.has_value());
  CHECK(bad.certificate->factor_order == 4);

  Group a4 = builtin_group("A4");
  GroupContext actx(a4);
  CHECK_FALSE(is_ICPC(sub(a4, {"(1 2)(3 4)"}), actx, 2).holds);

  CHECK_THROWS_AS(is_ICPC(i4, lctx, 6), DomainError);
}

TEST_CASE("ICPC monotone sanity: a p-CAP intersection is its own witness") {
  for (const char* name : {"S4", "SL23", "D12"}) {
    Group g = builtin_group(name);
    GroupContext ctx(g);
    for (const Group& h : all_subgroups(g).subgroups) {
      for (uint64_t p : prime_divisors(g.order())) {
        Group inter = intersect(h, commutator_subgroup(h, g));
        if (!is_pCAP(inter, ctx, p).holds)
          continue;
        IcpcResult r = is_ICPC(h, ctx, p);
        CHECK(r.holds);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->same_subgroup(inter));
      }
    }
  }
}

TEST_CASE("ICPhi with p-CAP Frattini implies ICPC") {
  for (const char* name : {"S4", "SL23"}) {
    Group g = builtin_group(name);
    GroupContext ctx(g);
    for (const Group& h : all_subgroups(g).subgroups)
      for (uint64_t p : prime_divisors(g.order()))
        if (is_ICPhi(h, ctx) && is_pCAP(frattini_subgroup(h), ctx, p).holds)
          CHECK(is_ICPC(h, ctx, p).holds);
  }
}

TEST_CASE("ICSC: spec examples") {
  Group s3 = builtin_group("S3");
  GroupContext sctx(s3);
  CHECK(is_ICSC(sub(s3, {"(1 2)"}), sctx).verdict == Tri::yes);

  Group s4 = builtin_group("S4");
  GroupContext s4ctx(s4);
  for (const Group& n : normal_subgroups(s4))
    CHECK(is_ICSC(n, s4ctx).verdict == Tri::yes);

  Group a4 = builtin_group("A4");
  GroupContext actx(a4);
  CHECK(is_ICSC(sub(a4, {"(1 2)(3 4)"}), actx).verdict == Tri::no);
}

TEST_CASE("supersolvable supplement search") {
  Group d12 = builtin_group("D12");
  GroupContext dctx(d12);
  for (const Group& h : all_subgroups(d12).subgroups) {
    SupplementResult r = has_supersolvable_supplement(h, dctx);
    CHECK(r.holds); // supersolvable ambient: A = G always works
  }

  Group s4 = builtin_group("S4");
  GroupContext sctx(s4);
  CHECK_FALSE(has_supersolvable_supplement(sub(s4, {"(1 2)(3 4)"}), sctx).holds);

  Group d8 = sylow_subgroup(s4, 2);
  SupplementResult ok = has_supersolvable_supplement(d8, sctx);
  CHECK(ok.holds);
  REQUIRE(ok.witness.has_value());
  // a cyclic order-3 supplement: |D8||C3| / |D8 n C3| = 24
  CHECK(ok.witness->order() * d8.order() /
            intersect(*ok.witness, d8).order() ==
        24);
  CHECK(is_supersolvable(*ok.witness));

  // witness supplements satisfy the product formula across a sweep
  for (const Group& h : all_subgroups(s4).subgroups) {
    SupplementResult r = has_supersolvable_supplement(h, sctx);
    if (r.holds) {
      uint64_t product = h.order() * r.witness->order() /
                         intersect(h, *r.witness).order();
      CHECK(product == s4.order());
      CHECK(is_supersolvable(*r.witness));
    }
  }
}

TEST_CASE("hypothesis targets") {
  Group c5 = builtin_group("C5");
  CHECK(hypothesis_targets(c5, 5).size() == 1);

  Group q8 = builtin_group("Q8");
  auto q8_targets = hypothesis_targets(q8, 2);
  REQUIRE(q8_targets.size() == 4);
  CHECK(q8_targets[0].order() == 2);
  CHECK(q8_targets[1].order() == 4);
  CHECK(q8_targets[2].order() == 4);
  CHECK(q8_targets[3].order() == 4);

  // abelian exemption: order-4 elements exist but do not become targets
  Group c4c2 = builtin_group("C4xC2");
  auto ab_targets = hypothesis_targets(c4c2, 2);
  REQUIRE(ab_targets.size() == 3);
  for (const Group& t : ab_targets)
    CHECK(t.order() == 2);

  // nonabelian 2-group with order-4 elements: the clause is active
  Group m16 = builtin_group("M16");
  bool has_order4 = false;
  for (const Group& t : hypothesis_targets(m16, 2))
    has_order4 |= t.order() == 4;
  CHECK(has_order4);

  CHECK_THROWS_AS(hypothesis_targets(builtin_group("S3"), 2), DomainError);
  CHECK_THROWS_AS(hypothesis_targets(q8, 4), DomainError);
}
