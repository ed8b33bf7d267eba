#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chief/caps.hpp"
#include "chief/chief_series.hpp"
#include "chief/group.hpp"

namespace chief {

class GroupContext;

enum class TheoremId {
  thm31,
  corU,
  thmPnil,
  lemma21a,
  lemma21b,
  lemma21c,
  lemma22,
  lemma5U,
  lemma6U,
  lemma7,
  minNonPnil,
};

const std::vector<TheoremId>& all_theorem_ids();
std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_id_from(const std::string& name);

enum class InstanceStatus { ok, violation, vacuous, indeterminate };
std::string to_string(InstanceStatus status);

/// One hypothesis/conclusion evaluation. status() is derived: violation
/// exactly when the hypothesis holds and the conclusion fails.
struct TheoremInstance {
  TheoremId theorem = TheoremId::thm31;
  std::string group;
  std::map<std::string, std::string> params;
  Tri hypothesis = Tri::no;
  bool conclusion = false;
  std::string witness;
  std::string certificate;
  std::string note;

  InstanceStatus status() const;
};

/// For every prime p and nontrivial normal p-subgroup P: if each order-p
/// (and order-4, for nonabelian 2-groups) cyclic subgroup of P is ICPC or
/// has a supersolvable supplement, then P lies in the U-hypercenter.
std::vector<TheoremInstance> check_theorem_31(GroupContext& g,
                                              const std::string& group_name);

/// The U-instance of the corollary: for every solvable normal N with G/N
/// supersolvable, the target condition on non-cyclic Sylow subgroups of
/// F(N) forces G supersolvable.
std::vector<TheoremInstance> check_corollary_U(GroupContext& g,
                                               const std::string& group_name);

/// For every nontrivial normal E with p = min prime of |E| and P a Sylow
/// p-subgroup of E: targets all ICPC implies E is p-nilpotent.
std::vector<TheoremInstance> check_theorem_pnilpotent(GroupContext& g,
                                                      const std::string& group_name);

/// The checkable preliminary lemmas, instantiated over qualifying tuples
/// (sampled deterministically above the configured threshold).
std::vector<TheoremInstance> lemma_suite(GroupContext& g,
                                         const std::string& group_name,
                                         TheoremId lemma);

/// Structure report for one minimal non-p-nilpotent subgroup.
struct MinNonPnilEntry {
  Group k;
  bool semidirect_structure = false;    // |K| = p^a q^b, normal Sylow p, cyclic Sylow q
  bool residual_is_sylow_p = false;     // K_p is the nilpotent residual of K
  bool frattini_central = false;        // Phi(K_p) <= Z(K)
  bool frattini_quotient_chief = false; // K_p/Phi(K_p) is a chief factor of K
  bool exponent_ok = false;             // exp(K_p) = p, or 4 when p = 2

  bool all_properties() const {
    return semidirect_structure && residual_is_sylow_p && frattini_central &&
           frattini_quotient_chief && exponent_ok;
  }
};

/// All subgroups of g minimal subject to not being p-nilpotent, each with
/// the five structure properties evaluated.
std::vector<MinNonPnilEntry> mine_min_non_p_nilpotent(GroupContext& g, uint64_t p);
std::vector<MinNonPnilEntry> mine_min_non_p_nilpotent(const Group& g, uint64_t p);

struct NamedGroup {
  std::string name;
  std::string source; // "builtin" or "file"
  Group group;
};

struct CampaignOptions {
  std::vector<TheoremId> selection;
  Caps caps = global_caps();
};

struct CampaignReport {
  struct CatalogueLine {
    std::string name;
    std::string source;
    uint64_t order = 0;
  };

  std::string engine;
  std::vector<CatalogueLine> catalogue;
  std::vector<TheoremInstance> instances;
  Caps caps;
  double total_ms = 0;
  size_t violations = 0;
  size_t indeterminates = 0;
};

/// Runs the selected checks over the catalogue, one context per group,
/// in parallel across groups. Output ordering is deterministic: instances
/// sorted by (group, theorem, params). Installs options.caps process-wide.
CampaignReport run_campaign(const std::vector<NamedGroup>& groups,
                            const CampaignOptions& options);

} // namespace chief
