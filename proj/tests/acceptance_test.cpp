// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 3-6 recompute everything directly against independent
// oracles rather than trusting the campaign output.

#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "chief/arith.hpp"
#include "chief/catalogue.hpp"
#include "chief/chief_series.hpp"
#include "chief/context.hpp"
#include "chief/icpc.hpp"
#include "chief/lattice.hpp"
#include "chief/morphism.hpp"
#include "chief/report.hpp"
#include "chief/theorems.hpp"
#include "oracles.hpp"

using namespace chief;
using nlohmann::json;

namespace {

int failures = 0;

void report(int id, const std::string& text, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << text;
  if (!pass && !detail.empty())
    std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!pass)
    ++failures;
}

std::vector<NamedGroup> load_catalogue() {
  std::vector<NamedGroup> groups;
  for (const ManifestEntry& entry : default_manifest())
    groups.push_back({entry.name, entry.source, resolve_entry(entry)});
  return groups;
}

} // namespace

int main() {
  const std::vector<NamedGroup> catalogue = load_catalogue();

  CampaignOptions options;
  options.selection = all_theorem_ids();
  options.caps = Caps{};

  // Criterion 1: full sweep, zero violations, under ten minutes.
  CampaignReport sweep;
  {
    const auto t0 = std::chrono::steady_clock::now();
    sweep = run_campaign(catalogue, options);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream detail;
    detail << sweep.violations << " violations, " << sweep.indeterminates
           << " indeterminate, " << seconds << "s";
    report(1, "theorem all on the default catalogue: 0 violations in < 600 s",
           sweep.violations == 0 && sweep.indeterminates == 0 && seconds < 600.0,
           detail.str());
  }

  // Criterion 2: non-vacuity and sharpness witnesses, exactly as derived.
  {
    auto has = [&](TheoremId id, const std::string& group, Tri hyp, bool concl) {
      for (const TheoremInstance& inst : sweep.instances)
        if (inst.theorem == id && inst.group == group && inst.hypothesis == hyp &&
            inst.conclusion == concl)
          return true;
      return false;
    };
    bool ok = has(TheoremId::thm31, "S3", Tri::yes, true) &&
              has(TheoremId::thmPnil, "S3", Tri::yes, true) &&
              has(TheoremId::thm31, "S4", Tri::no, false) &&
              has(TheoremId::thmPnil, "SL23", Tri::no, false) &&
              has(TheoremId::thmPnil, "A4", Tri::no, false);
    report(2, "ok instances on S3 and sharpness witnesses on S4/SL23/A4 present",
           ok, "missing expected instance");
  }

  // Criterion 3: oracle equivalences on every catalogue group of order <= 100.
  {
    bool ok = true;
    std::string detail;
    for (const NamedGroup& ng : catalogue) {
      const Group& g = ng.group;
      if (g.order() > 100)
        continue;
      if (oracle::closure_elements(g.degree(), g.generators()).size() != g.order()) {
        ok = false;
        detail = ng.name + ": closure order mismatch";
        break;
      }
      GroupContext ctx(g);
      if (!u_hypercenter(ctx).same_subgroup(u_hypercenter_oracle(ctx))) {
        ok = false;
        detail = ng.name + ": U-hypercenter routes disagree";
        break;
      }
      for (uint64_t p : prime_divisors(g.order())) {
        bool via_residual = is_p_nilpotent(g, p);
        bool via_complement = false;
        const uint64_t cofactor = g.order() / p_part(g.order(), p);
        for (const Group& n : ctx.normals())
          if (n.order() == cofactor && n.order() % p != 0)
            via_complement = true;
        if (via_residual != via_complement) {
          ok = false;
          detail = ng.name + ": p-nilpotency routes disagree at p=" + std::to_string(p);
          break;
        }
      }
      if (!ok)
        break;
      if (ctx.lattice().subgroups.size() !=
          oracle::all_subgroup_sets(g.degree(), g.elements()).size()) {
        ok = false;
        detail = ng.name + ": subgroup count mismatch";
        break;
      }
    }
    report(3, "BSGS order, U-hypercenter, p-nilpotency and lattice oracles agree (order <= 100)",
           ok, detail);
  }

  // Criterion 4: Jordan-Holder across enumerated chief series (limit 1000).
  {
    bool ok = true;
    std::string detail;
    for (const NamedGroup& ng : catalogue) {
      GroupContext ctx(ng.group);
      auto run = chief_series_enumerate(ctx, 1000);
      if (run.series.size() < 2)
        continue;
      std::multiset<uint64_t> reference;
      for (const ChiefFactor& f : run.series.front().factors)
        reference.insert(f.factor_order);
      for (const ChiefSeries& s : run.series) {
        std::multiset<uint64_t> got;
        for (const ChiefFactor& f : s.factors)
          got.insert(f.factor_order);
        if (got != reference) {
          ok = false;
          detail = ng.name + ": factor multisets differ";
        }
      }
      if (!ok)
        break;
    }
    report(4, "Jordan-Holder factor multisets identical across chief series", ok,
           detail);
  }

  // Criterion 5: Lemma 2.1(1) exhaustively on the whole catalogue.
  {
    bool ok = true;
    std::string detail;
    for (const NamedGroup& ng : catalogue) {
      GroupContext ctx(ng.group);
      for (const Group& n : ctx.normals())
        for (uint64_t p : prime_divisors(ng.group.order()))
          if (!is_pCAP(n, ctx, p).holds) {
            ok = false;
            detail = ng.name + ": normal subgroup not p-CAP at p=" + std::to_string(p);
          }
      if (!ok)
        break;
    }
    report(5, "every normal subgroup is p-CAP for every prime (exhaustive)", ok,
           detail);
  }

  // Criterion 6: Lemma 2.2 exhaustively for |G| <= 100.
  {
    bool ok = true;
    std::string detail;
    for (const NamedGroup& ng : catalogue) {
      const Group& g = ng.group;
      if (g.order() > 100)
        continue;
      GroupContext ctx(g);
      for (uint64_t p : prime_divisors(g.order())) {
        for (const Group& h : ctx.lattice().subgroups) {
          if (!is_ICPC(h, ctx, p).holds)
            continue;
          for (const Group& n : ctx.normals()) {
            if (std::gcd(h.order(), n.order()) != 1)
              continue;
            Group image = ctx.quotient(n).project(h);
            if (!is_ICPC(image, ctx.quotient_context(n), p).holds) {
              ok = false;
              detail = ng.name + ": ICPC not preserved in quotient at p=" +
                       std::to_string(p);
            }
          }
        }
      }
      if (!ok)
        break;
    }
    report(6, "ICPC subgroups stay ICPC in coprime quotients (|G| <= 100, exhaustive)",
           ok, detail);
  }

  // Criterion 7: pinned derived vectors reproduce bit-exactly as JSON.
  {
    json actual;
    {
      Group s4 = builtin_group("S4");
      GroupContext ctx(s4);
      json orders = json::array();
      for (const Group& n : ctx.normals())
        orders.push_back(n.order());
      actual["S4_normal_orders"] = orders;

      Group t = s4.subgroup({Perm::parse("(1 2)", 4)});
      actual["pcap_S4_transposition_p2"] = is_pCAP(t, ctx, 2).holds;

      auto mined = mine_min_non_p_nilpotent(ctx, 2);
      json mine = json::object();
      mine["count"] = mined.size();
      json morders = json::array(), props = json::array();
      for (const auto& entry : mined) {
        morders.push_back(entry.k.order());
        props.push_back(entry.semidirect_structure && entry.residual_is_sylow_p &&
                        entry.frattini_central && entry.frattini_quotient_chief &&
                        entry.exponent_ok);
      }
      mine["orders"] = morders;
      mine["all_five_properties"] = props;
      actual["min_non_2_nilpotent_S4"] = mine;
    }
    {
      Group sl23 = builtin_group("SL23");
      GroupContext ctx(sl23);
      json orders = json::array();
      for (const ChiefFactor& f : ctx.chief_pairs())
        orders.push_back(f.factor_order);
      actual["SL23_chief_factor_orders"] = orders;

      Group i4 = sl23.subgroup({Perm::parse("(1 3 2 6)(4 5 8 7)", 8)});
      IcpcResult r = is_ICPC(i4, ctx, 2);
      actual["icpc_SL23_order4_p2"] = {
          {"holds", r.holds},
          {"certificate_factor_order",
           r.certificate ? json(r.certificate->factor_order) : json(nullptr)}};
    }
    const json expected = json::parse(R"json({
      "S4_normal_orders": [1, 4, 12, 24],
      "SL23_chief_factor_orders": [2, 4, 3],
      "pcap_S4_transposition_p2": true,
      "icpc_SL23_order4_p2": {"holds": false, "certificate_factor_order": 4},
      "min_non_2_nilpotent_S4": {"count": 1, "orders": [12], "all_five_properties": [true]}
    })json");
    report(7, "pinned derived vectors reproduce bit-exactly",
           actual.dump() == expected.dump(),
           "expected " + expected.dump() + " got " + actual.dump());
  }

  // Criterion 8: determinism of consecutive campaign runs.
  {
    CampaignReport again = run_campaign(catalogue, options);
    json a = json::parse(report_json(sweep));
    json b = json::parse(report_json(again));
    a.erase("timing");
    b.erase("timing");
    report(8, "consecutive campaign runs agree byte for byte (timing excluded)",
           a.dump() == b.dump(), "reports differ");
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << (8 - failures) << "/8)" << std::endl;
  return failures;
}
