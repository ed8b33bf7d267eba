#include "chief/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "chief/arith.hpp"
#include "chief/context.hpp"
#include "chief/error.hpp"
#include "chief/icpc.hpp"
#include "chief/lattice.hpp"
#include "chief/morphism.hpp"
#include "chief/version.hpp"

namespace chief {

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = {
      TheoremId::thm31,    TheoremId::corU,     TheoremId::thmPnil,
      TheoremId::lemma21a, TheoremId::lemma21b, TheoremId::lemma21c,
      TheoremId::lemma22,  TheoremId::lemma5U,  TheoremId::lemma6U,
      TheoremId::lemma7,   TheoremId::minNonPnil};
  return ids;
}

std::string to_string(TheoremId id) {
  switch (id) {
  case TheoremId::thm31: return "thm31";
  case TheoremId::corU: return "corU";
  case TheoremId::thmPnil: return "thmPnil";
  case TheoremId::lemma21a: return "lemma21a";
  case TheoremId::lemma21b: return "lemma21b";
  case TheoremId::lemma21c: return "lemma21c";
  case TheoremId::lemma22: return "lemma22";
  case TheoremId::lemma5U: return "lemma5U";
  case TheoremId::lemma6U: return "lemma6U";
  case TheoremId::lemma7: return "lemma7";
  case TheoremId::minNonPnil: return "minNonPnil";
  }
  return "unknown";
}

std::optional<TheoremId> theorem_id_from(const std::string& name) {
  for (TheoremId id : all_theorem_ids())
    if (to_string(id) == name)
      return id;
  return std::nullopt;
}

std::string to_string(InstanceStatus status) {
  switch (status) {
  case InstanceStatus::ok: return "ok";
  case InstanceStatus::violation: return "violation";
  case InstanceStatus::vacuous: return "vacuous";
  case InstanceStatus::indeterminate: return "indeterminate";
  }
  return "unknown";
}

InstanceStatus TheoremInstance::status() const {
  if (hypothesis == Tri::unknown)
    return InstanceStatus::indeterminate;
  if (hypothesis == Tri::yes)
    return conclusion ? InstanceStatus::ok : InstanceStatus::violation;
  return InstanceStatus::vacuous;
}

namespace {

bool is_p_group_for(const Group& s, uint64_t p) {
  return p_part(s.order(), p) == s.order();
}

bool is_cyclic(const Group& s) {
  for (const Perm& e : s.elements())
    if (e.order() == s.order())
      return true;
  return false;
}

std::string factor_text(const ChiefFactor& f) {
  return "factor order=" + std::to_string(f.factor_order) + " below[" +
         subgroup_label(f.below) + "] above[" + subgroup_label(f.above) + "]";
}

struct TargetCheck {
  bool all_ok = true;
  std::string failing_label;
  std::string detail;
};

// The shared hypothesis shape: every target is ICPC at p, optionally
// rescued by a supersolvable supplement.
TargetCheck targets_hypothesis(GroupContext& ctx, const std::vector<Group>& targets,
                               uint64_t p, bool allow_supplement) {
  for (const Group& t : targets) {
    IcpcResult icpc = is_ICPC(t, ctx, p);
    if (icpc.holds)
      continue;
    if (allow_supplement && has_supersolvable_supplement(t, ctx).holds)
      continue;
    std::string detail = icpc.certificate ? factor_text(*icpc.certificate) : "";
    return {false, subgroup_label(t), detail};
  }
  return {true, "", ""};
}

// Deterministic uniform sample of tuple indices above the threshold.
std::vector<size_t> sample_indices(size_t n, const Caps& caps, bool& sampled) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  if (n <= caps.sample_threshold) {
    sampled = false;
    return idx;
  }
  std::mt19937 rng(caps.sample_seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(caps.sample_threshold);
  std::sort(idx.begin(), idx.end());
  sampled = true;
  return idx;
}

} // namespace

std::vector<TheoremInstance> check_theorem_31(GroupContext& ctx,
                                              const std::string& group_name) {
  std::vector<TheoremInstance> out;
  const Group& g = ctx.group();
  for (uint64_t p : prime_divisors(g.order())) {
    for (const Group& pn : ctx.normals()) {
      if (pn.is_trivial() || !is_p_group_for(pn, p))
        continue;
      TheoremInstance inst;
      inst.theorem = TheoremId::thm31;
      inst.group = group_name;
      inst.params["p"] = std::to_string(p);
      inst.params["P"] = subgroup_label(pn);
      try {
        TargetCheck hc = targets_hypothesis(ctx, hypothesis_targets(pn, p), p, true);
        inst.hypothesis = tri_of(hc.all_ok);
        if (!hc.all_ok)
          inst.certificate = "target[" + hc.failing_label + "] " + hc.detail;
        inst.conclusion = u_hypercenter(ctx).contains_subgroup(pn);
      } catch (const CapExceeded& e) {
        inst.hypothesis = Tri::unknown;
        inst.note = e.what();
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<TheoremInstance> check_corollary_U(GroupContext& ctx,
                                               const std::string& group_name) {
  std::vector<TheoremInstance> out;
  for (const Group& n : ctx.normals()) {
    try {
      if (!is_solvable(n))
        continue;
      if (!ctx.quotient_context(n).ambient_supersolvable())
        continue;
    } catch (const CapExceeded& e) {
      TheoremInstance inst;
      inst.theorem = TheoremId::corU;
      inst.group = group_name;
      inst.params["N"] = subgroup_label(n);
      inst.hypothesis = Tri::unknown;
      inst.note = e.what();
      out.push_back(std::move(inst));
      continue;
    }
    TheoremInstance inst;
    inst.theorem = TheoremId::corU;
    inst.group = group_name;
    inst.params["N"] = subgroup_label(n);
    try {
      Group fit = fitting_subgroup(n);
      inst.params["fitting"] = subgroup_label(fit);
      bool ok = true;
      for (uint64_t r : prime_divisors(fit.order())) {
        Group syl = sylow_subgroup(fit, r);
        if (is_cyclic(syl))
          continue;
        TargetCheck hc = targets_hypothesis(ctx, hypothesis_targets(syl, r), r, true);
        if (!hc.all_ok) {
          ok = false;
          inst.certificate = "p=" + std::to_string(r) + " target[" +
                             hc.failing_label + "] " + hc.detail;
          break;
        }
      }
      inst.hypothesis = tri_of(ok);
      inst.conclusion = ctx.ambient_supersolvable();
    } catch (const CapExceeded& e) {
      inst.hypothesis = Tri::unknown;
      inst.note = e.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<TheoremInstance> check_theorem_pnilpotent(GroupContext& ctx,
                                                      const std::string& group_name) {
  std::vector<TheoremInstance> out;
  for (const Group& e : ctx.normals()) {
    if (e.is_trivial())
      continue;
    const uint64_t p = prime_divisors(e.order()).front();
    TheoremInstance inst;
    inst.theorem = TheoremId::thmPnil;
    inst.group = group_name;
    inst.params["E"] = subgroup_label(e);
    inst.params["p"] = std::to_string(p);
    try {
      Group syl = sylow_subgroup(e, p);
      inst.params["P"] = subgroup_label(syl);
      TargetCheck hc = targets_hypothesis(ctx, hypothesis_targets(syl, p), p, false);
      inst.hypothesis = tri_of(hc.all_ok);
      if (!hc.all_ok)
        inst.certificate = "target[" + hc.failing_label + "] " + hc.detail;
      inst.conclusion = is_p_nilpotent(e, p);
    } catch (const CapExceeded& ex) {
      inst.hypothesis = Tri::unknown;
      inst.note = ex.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

TheoremInstance lemma_instance(TheoremId id, const std::string& group_name,
                               bool sampled) {
  TheoremInstance inst;
  inst.theorem = id;
  inst.group = group_name;
  inst.hypothesis = Tri::yes;
  if (sampled)
    inst.params["sampled"] = "true";
  return inst;
}

std::vector<TheoremInstance> suite_lemma21a(GroupContext& ctx,
                                            const std::string& group_name) {
  std::vector<TheoremInstance> out;
  struct Tuple {
    size_t n;
    uint64_t p;
  };
  std::vector<Tuple> tuples;
  const auto primes = prime_divisors(ctx.group().order());
  for (size_t i = 0; i < ctx.normals().size(); ++i)
    for (uint64_t p : primes)
      tuples.push_back({i, p});
  bool sampled = false;
  for (size_t ti : sample_indices(tuples.size(), ctx.caps(), sampled)) {
    const Group& n = ctx.normals()[tuples[ti].n];
    const uint64_t p = tuples[ti].p;
    TheoremInstance inst = lemma_instance(TheoremId::lemma21a, group_name, sampled);
    inst.params["N"] = subgroup_label(n);
    inst.params["p"] = std::to_string(p);
    try {
      PcapResult r = is_pCAP(n, ctx, p);
      inst.conclusion = r.holds;
      if (!r.holds && r.violation)
        inst.certificate = factor_text(*r.violation);
    } catch (const CapExceeded& e) {
      inst.hypothesis = Tri::unknown;
      inst.note = e.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

// Quotient-closure lemmas share a tuple shape: (H, N, p) with a
// qualification predicate, conclusion evaluated on the image of H in G/N.
enum class QuotientLemma { over_normal, coprime_pcap, coprime_icpc };

std::vector<TheoremInstance> suite_quotient_lemma(GroupContext& ctx,
                                                  const std::string& group_name,
                                                  TheoremId id, QuotientLemma kind) {
  std::vector<TheoremInstance> out;
  struct Tuple {
    size_t h;
    size_t n;
    uint64_t p;
  };
  std::vector<Tuple> tuples;
  const auto primes = prime_divisors(ctx.group().order());
  const auto& subs = ctx.lattice().subgroups;
  const auto& normals = ctx.normals();

  for (uint64_t p : primes) {
    // Qualification per subgroup is shared across the N loop.
    for (size_t hi = 0; hi < subs.size(); ++hi) {
      const Group& h = subs[hi];
      bool qualifies = false;
      switch (kind) {
      case QuotientLemma::over_normal:
      case QuotientLemma::coprime_pcap:
        qualifies = is_pCAP(h, ctx, p).holds;
        break;
      case QuotientLemma::coprime_icpc:
        qualifies = is_ICPC(h, ctx, p).holds;
        break;
      }
      if (!qualifies)
        continue;
      for (size_t ni = 0; ni < normals.size(); ++ni) {
        const Group& n = normals[ni];
        if (kind == QuotientLemma::over_normal) {
          if (!h.contains_subgroup(n))
            continue;
        } else {
          if (std::gcd(h.order(), n.order()) != 1)
            continue;
        }
        tuples.push_back({hi, ni, p});
      }
    }
  }

  bool sampled = false;
  for (size_t ti : sample_indices(tuples.size(), ctx.caps(), sampled)) {
    const Group& h = subs[tuples[ti].h];
    const Group& n = normals[tuples[ti].n];
    const uint64_t p = tuples[ti].p;
    TheoremInstance inst = lemma_instance(id, group_name, sampled);
    inst.params["H"] = subgroup_label(h);
    inst.params["N"] = subgroup_label(n);
    inst.params["p"] = std::to_string(p);
    try {
      const Morphism& q = ctx.quotient(n);
      GroupContext& qctx = ctx.quotient_context(n);
      Group image = q.project(h); // equals the image of HN/N
      if (kind == QuotientLemma::coprime_icpc) {
        IcpcResult r = is_ICPC(image, qctx, p);
        inst.conclusion = r.holds;
        if (!r.holds && r.certificate)
          inst.certificate = factor_text(*r.certificate);
      } else {
        PcapResult r = is_pCAP(image, qctx, p);
        inst.conclusion = r.holds;
        if (!r.holds && r.violation)
          inst.certificate = factor_text(*r.violation);
      }
    } catch (const CapExceeded& e) {
      inst.hypothesis = Tri::unknown;
      inst.note = e.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<TheoremInstance> suite_lemma5U(GroupContext& ctx,
                                           const std::string& group_name) {
  std::vector<TheoremInstance> out;
  for (const Group& e : ctx.normals()) {
    if (e.is_trivial())
      continue;
    TheoremInstance inst = lemma_instance(TheoremId::lemma5U, group_name, false);
    inst.params["E"] = subgroup_label(e);
    try {
      Group z = u_hypercenter(ctx);
      if (!z.contains_subgroup(generalized_fitting(e)))
        continue; // hypothesis F*(E) <= Z_U(G) fails; not a qualifying tuple
      inst.conclusion = z.contains_subgroup(e);
    } catch (const CapExceeded& ex) {
      inst.hypothesis = Tri::unknown;
      inst.note = ex.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<TheoremInstance> suite_lemma6U(GroupContext& ctx,
                                           const std::string& group_name) {
  std::vector<TheoremInstance> out;
  for (const Group& n : ctx.normals()) {
    TheoremInstance inst = lemma_instance(TheoremId::lemma6U, group_name, false);
    inst.params["N"] = subgroup_label(n);
    try {
      if (!ctx.quotient_context(n).ambient_supersolvable())
        continue;
      if (!u_hypercenter(ctx).contains_subgroup(n))
        continue;
      inst.conclusion = ctx.ambient_supersolvable();
    } catch (const CapExceeded& ex) {
      inst.hypothesis = Tri::unknown;
      inst.note = ex.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<TheoremInstance> suite_lemma7(GroupContext& ctx,
                                          const std::string& group_name) {
  std::vector<TheoremInstance> out;
  const Group& g = ctx.group();
  for (const Group& q : ctx.normals()) {
    if (q.is_trivial())
      continue;
    const auto qprimes = prime_divisors(q.order());
    if (qprimes.size() != 1)
      continue; // Q must be a p-group
    for (const Group& m : ctx.maximals()) {
      uint64_t inter = intersect(m, q).order();
      if (m.order() * q.order() / inter != g.order())
        continue;
      TheoremInstance inst = lemma_instance(TheoremId::lemma7, group_name, false);
      inst.params["M"] = subgroup_label(m);
      inst.params["Q"] = subgroup_label(q);
      inst.params["p"] = std::to_string(qprimes.front());
      try {
        inst.conclusion = intersect(q, m).is_normal_in(g);
      } catch (const CapExceeded& ex) {
        inst.hypothesis = Tri::unknown;
        inst.note = ex.what();
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<TheoremInstance> suite_min_non_pnil(GroupContext& ctx,
                                                const std::string& group_name) {
  std::vector<TheoremInstance> out;
  for (uint64_t p : prime_divisors(ctx.group().order())) {
    std::vector<MinNonPnilEntry> entries;
    try {
      entries = mine_min_non_p_nilpotent(ctx, p);
    } catch (const CapExceeded& e) {
      TheoremInstance inst = lemma_instance(TheoremId::minNonPnil, group_name, false);
      inst.params["p"] = std::to_string(p);
      inst.hypothesis = Tri::unknown;
      inst.note = e.what();
      out.push_back(std::move(inst));
      continue;
    }
    for (const MinNonPnilEntry& entry : entries) {
      TheoremInstance inst = lemma_instance(TheoremId::minNonPnil, group_name, false);
      inst.params["p"] = std::to_string(p);
      inst.params["K"] = subgroup_label(entry.k);
      inst.conclusion = entry.all_properties();
      if (!inst.conclusion) {
        std::string bad;
        auto mark = [&](bool okay, const char* tag) {
          if (!okay) {
            if (!bad.empty())
              bad += ",";
            bad += tag;
          }
        };
        mark(entry.semidirect_structure, "semidirect");
        mark(entry.residual_is_sylow_p, "residual");
        mark(entry.frattini_central, "frattini_central");
        mark(entry.frattini_quotient_chief, "chief_quotient");
        mark(entry.exponent_ok, "exponent");
        inst.certificate = "failed:" + bad;
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

} // namespace

std::vector<TheoremInstance> lemma_suite(GroupContext& ctx,
                                         const std::string& group_name,
                                         TheoremId lemma) {
  switch (lemma) {
  case TheoremId::lemma21a:
    return suite_lemma21a(ctx, group_name);
  case TheoremId::lemma21b:
    return suite_quotient_lemma(ctx, group_name, TheoremId::lemma21b,
                                QuotientLemma::over_normal);
  case TheoremId::lemma21c:
    return suite_quotient_lemma(ctx, group_name, TheoremId::lemma21c,
                                QuotientLemma::coprime_pcap);
  case TheoremId::lemma22:
    return suite_quotient_lemma(ctx, group_name, TheoremId::lemma22,
                                QuotientLemma::coprime_icpc);
  case TheoremId::lemma5U:
    return suite_lemma5U(ctx, group_name);
  case TheoremId::lemma6U:
    return suite_lemma6U(ctx, group_name);
  case TheoremId::lemma7:
    return suite_lemma7(ctx, group_name);
  case TheoremId::minNonPnil:
    return suite_min_non_pnil(ctx, group_name);
  default:
    throw DomainError("lemma_suite: not a lemma id: " + to_string(lemma));
  }
}

std::vector<MinNonPnilEntry> mine_min_non_p_nilpotent(GroupContext& ctx, uint64_t p) {
  if (!is_prime(p))
    throw DomainError("mine_min_non_p_nilpotent: p must be prime");
  const auto& subs = ctx.lattice().subgroups;
  std::vector<bool> pnil(subs.size());
  for (size_t i = 0; i < subs.size(); ++i)
    pnil[i] = is_p_nilpotent(subs[i], p);

  std::vector<MinNonPnilEntry> out;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (pnil[i])
      continue;
    bool minimal = true;
    for (size_t j = 0; j < subs.size() && minimal; ++j) {
      if (pnil[j] || subs[j].order() >= subs[i].order())
        continue;
      if (subs[i].contains_subgroup(subs[j]))
        minimal = false;
    }
    if (!minimal)
      continue;

    const Group& k = subs[i];
    MinNonPnilEntry entry{k, false, false, false, false, false};
    const auto primes = prime_divisors(k.order());
    const bool two_primes =
        primes.size() == 2 &&
        std::find(primes.begin(), primes.end(), p) != primes.end();
    if (two_primes) {
      const uint64_t q = primes[0] == p ? primes[1] : primes[0];
      Group kp = sylow_subgroup(k, p);
      Group kq = sylow_subgroup(k, q);
      entry.semidirect_structure = kp.is_normal_in(k) && is_cyclic(kq);

      // Nilpotent residual: normals with nilpotent quotient are closed
      // under intersection, so the least-order one is the residual.
      const auto knormals = normal_subgroups(k);
      Group residual = k;
      for (const Group& nrm : knormals) {
        if (nrm.order() >= residual.order())
          continue;
        if (is_nilpotent(quotient_by(k, nrm).target()))
          residual = nrm;
      }
      entry.residual_is_sylow_p = residual.same_subgroup(kp);

      Group phi = frattini_subgroup(kp);
      entry.frattini_central = center(k).contains_subgroup(phi);
      for (const ChiefFactor& f : chief_factor_pairs(k, knormals)) {
        if (f.below.order() == phi.order() && f.below.same_subgroup(phi) &&
            f.above.order() == kp.order() && f.above.same_subgroup(kp)) {
          entry.frattini_quotient_chief = true;
          break;
        }
      }
      const uint64_t exp = exponent(kp);
      entry.exponent_ok = p == 2 ? (exp == 2 || exp == 4) : exp == p;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<MinNonPnilEntry> mine_min_non_p_nilpotent(const Group& g, uint64_t p) {
  GroupContext ctx(g);
  return mine_min_non_p_nilpotent(ctx, p);
}

namespace {

std::vector<TheoremInstance> dispatch_check(GroupContext& ctx, const std::string& name,
                                            TheoremId id) {
  switch (id) {
  case TheoremId::thm31:
    return check_theorem_31(ctx, name);
  case TheoremId::corU:
    return check_corollary_U(ctx, name);
  case TheoremId::thmPnil:
    return check_theorem_pnilpotent(ctx, name);
  default:
    return lemma_suite(ctx, name, id);
  }
}

std::string params_key(const TheoremInstance& inst) {
  std::string key;
  for (const auto& [k, v] : inst.params) {
    key += k;
    key += '=';
    key += v;
    key += ';';
  }
  return key;
}

} // namespace

CampaignReport run_campaign(const std::vector<NamedGroup>& groups,
                            const CampaignOptions& options) {
  if (groups.empty())
    throw DomainError("run_campaign: empty catalogue");
  if (options.selection.empty())
    throw DomainError("run_campaign: empty theorem selection");
  std::vector<TheoremId> selection;
  for (TheoremId id : options.selection)
    if (std::find(selection.begin(), selection.end(), id) == selection.end())
      selection.push_back(id);

  global_caps() = options.caps;
  const auto t0 = std::chrono::steady_clock::now();

  CampaignReport report;
  report.engine = engine_version;
  report.caps = options.caps;
  for (const NamedGroup& g : groups)
    report.catalogue.push_back({g.name, g.source, g.group.order()});

  std::vector<std::vector<TheoremInstance>> buckets(groups.size());
  std::atomic<size_t> cursor{0};
  unsigned jobs = options.caps.jobs ? options.caps.jobs
                                    : std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(groups.size())));

  std::vector<std::exception_ptr> worker_errors(jobs);
  auto work = [&](unsigned wid) {
    try {
      for (;;) {
        const size_t i = cursor.fetch_add(1);
        if (i >= groups.size())
          break;
        GroupContext ctx(groups[i].group, options.caps);
        for (TheoremId id : selection) {
          try {
            auto part = dispatch_check(ctx, groups[i].name, id);
            buckets[i].insert(buckets[i].end(),
                              std::make_move_iterator(part.begin()),
                              std::make_move_iterator(part.end()));
          } catch (const CapExceeded& e) {
            TheoremInstance inst;
            inst.theorem = id;
            inst.group = groups[i].name;
            inst.hypothesis = Tri::unknown;
            inst.note = e.what();
            buckets[i].push_back(std::move(inst));
          }
        }
      }
    } catch (...) {
      worker_errors[wid] = std::current_exception();
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w)
      threads.emplace_back(work, w);
    for (auto& t : threads)
      t.join();
  }
  for (const auto& err : worker_errors)
    if (err)
      std::rethrow_exception(err);

  for (auto& bucket : buckets)
    report.instances.insert(report.instances.end(),
                            std::make_move_iterator(bucket.begin()),
                            std::make_move_iterator(bucket.end()));
  std::stable_sort(report.instances.begin(), report.instances.end(),
                   [](const TheoremInstance& a, const TheoremInstance& b) {
                     if (a.group != b.group)
                       return a.group < b.group;
                     if (a.theorem != b.theorem)
                       return to_string(a.theorem) < to_string(b.theorem);
                     return params_key(a) < params_key(b);
                   });

  for (const TheoremInstance& inst : report.instances) {
    if (inst.status() == InstanceStatus::violation)
      ++report.violations;
    if (inst.status() == InstanceStatus::indeterminate)
      ++report.indeterminates;
  }
  report.total_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return report;
}

} // namespace chief
