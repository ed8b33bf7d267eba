#include "chief/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "chief/arith.hpp"
#include "chief/caps.hpp"
#include "chief/catalogue.hpp"
#include "chief/chief_series.hpp"
#include "chief/context.hpp"
#include "chief/error.hpp"
#include "chief/icpc.hpp"
#include "chief/lattice.hpp"
#include "chief/report.hpp"
#include "chief/theorems.hpp"
#include "chief/version.hpp"

namespace chief {

namespace {

Group resolve_groupspec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@')
    return load_group_file(spec.substr(1));
  return builtin_group(spec);
}

Group subgroup_from_args(const Group& g, const std::vector<std::string>& gens) {
  std::vector<Perm> perms;
  for (const std::string& text : gens)
    perms.push_back(Perm::parse(text, g.degree()));
  return g.subgroup(std::move(perms));
}

int run_props(const std::string& groupspec, std::ostream& out) {
  Group g = resolve_groupspec(groupspec);
  GroupContext ctx(g);
  out << "group " << groupspec << ": order " << g.order() << ", degree "
      << g.degree() << "\n";

  out << "normal subgroups (" << ctx.normals().size() << "):\n";
  for (const Group& n : ctx.normals())
    out << "  " << subgroup_label(n) << (n.order() == g.order() ? "  [G]" : "")
        << "\n";

  out << "chief factor pairs (" << ctx.chief_pairs().size() << "):\n";
  for (const ChiefFactor& f : ctx.chief_pairs())
    out << "  order " << f.factor_order << ": " << subgroup_label(f.below)
        << "  <  " << subgroup_label(f.above) << "\n";

  Group z = u_hypercenter(ctx);
  out << "U-hypercenter: " << subgroup_label(z) << "\n";
  out << "predicates: nilpotent=" << (is_nilpotent(g) ? "true" : "false")
      << " solvable=" << (is_solvable(g) ? "true" : "false")
      << " supersolvable=" << (ctx.ambient_supersolvable() ? "true" : "false");
  for (uint64_t p : prime_divisors(g.order()))
    out << " " << p << "-nilpotent=" << (is_p_nilpotent(g, p) ? "true" : "false");
  out << "\n";
  return 0;
}

int run_pcap(const std::string& groupspec, const std::vector<std::string>& gens,
             uint64_t p, std::ostream& out) {
  Group g = resolve_groupspec(groupspec);
  GroupContext ctx(g);
  Group sub = subgroup_from_args(g, gens);
  PcapResult r = is_pCAP(sub, ctx, p);
  out << "subgroup " << subgroup_label(sub) << " in " << groupspec << " with p="
      << p << ": " << (r.holds ? "p-CAP" : "not p-CAP") << "\n";
  if (!r.holds && r.violation)
    out << "certificate: factor of order " << r.violation->factor_order << ": "
        << subgroup_label(r.violation->below) << "  <  "
        << subgroup_label(r.violation->above) << "\n";
  return 0;
}

int run_icpc(const std::string& groupspec, const std::vector<std::string>& gens,
             uint64_t p, std::ostream& out) {
  Group g = resolve_groupspec(groupspec);
  GroupContext ctx(g);
  Group sub = subgroup_from_args(g, gens);
  IcpcResult r = is_ICPC(sub, ctx, p);
  out << "subgroup " << subgroup_label(sub) << " in " << groupspec << " with p="
      << p << ": " << (r.holds ? "ICPC" : "not ICPC") << "\n";
  if (r.holds && r.witness)
    out << "witness: " << subgroup_label(*r.witness) << "\n";
  if (!r.holds && r.certificate)
    out << "certificate: factor of order " << r.certificate->factor_order << ": "
        << subgroup_label(r.certificate->below) << "  <  "
        << subgroup_label(r.certificate->above) << "\n";
  return 0;
}

int run_chief(const std::string& groupspec, bool series, std::ostream& out) {
  Group g = resolve_groupspec(groupspec);
  GroupContext ctx(g);
  out << "chief factor pairs of " << groupspec << " (" << ctx.chief_pairs().size()
      << "):\n";
  for (const ChiefFactor& f : ctx.chief_pairs())
    out << "  order " << f.factor_order << ": " << subgroup_label(f.below)
        << "  <  " << subgroup_label(f.above) << "\n";
  if (series) {
    SeriesEnumeration run =
        chief_series_enumerate(ctx, global_caps().series_limit);
    out << "chief series (" << run.series.size()
        << (run.complete ? "" : ", truncated") << "):\n";
    for (const ChiefSeries& s : run.series) {
      out << " ";
      for (const Group& term : s.terms)
        out << " " << term.order();
      out << "  factors:";
      for (const ChiefFactor& f : s.factors)
        out << " " << f.factor_order;
      out << "\n";
    }
  }
  return 0;
}

int run_theorem(const std::string& id, const std::string& catalogue,
                uint64_t max_order, unsigned jobs, const std::string& out_path,
                const std::string& format, std::ostream& out, std::ostream& err) {
  std::vector<TheoremId> selection;
  if (id == "all") {
    selection = all_theorem_ids();
  } else {
    auto tid = theorem_id_from(id);
    if (!tid)
      throw DomainError("unknown theorem id: " + id);
    selection = {*tid};
  }

  std::vector<ManifestEntry> entries =
      catalogue == "default" ? default_manifest() : load_manifest(catalogue);

  std::vector<NamedGroup> groups;
  for (const ManifestEntry& entry : entries) {
    Group g = resolve_entry(entry);
    if (max_order && g.order() > max_order)
      continue;
    groups.push_back({entry.name, entry.source, std::move(g)});
  }
  if (groups.empty())
    throw DomainError("catalogue is empty after filtering");

  CampaignOptions options;
  options.selection = selection;
  options.caps = global_caps();
  if (jobs)
    options.caps.jobs = jobs;

  CampaignReport report = run_campaign(groups, options);

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file)
      throw Error("cannot write report: " + out_path);
    emit_report(report, format, file);
    out << "report written to " << out_path << "\n";
  } else {
    emit_report(report, format, out);
  }
  if (report.violations > 0) {
    err << report.violations << " violation(s) found\n";
    return 1;
  }
  return 0;
}

} // namespace

int cli_dispatch(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"finite group engine for chief-factor predicates and theorem sweeps"};
  app.name("chief");
  app.set_version_flag("--version", std::string(engine_version));
  app.require_subcommand(1);

  std::string groupspec;
  std::vector<std::string> sub_gens;
  uint64_t prime = 0;
  bool series = false;

  auto* props = app.add_subcommand(
      "props", "orders, normal subgroups, chief factors, predicates");
  props->add_option("group", groupspec, "builtin name or @path")->required();

  auto* pcap = app.add_subcommand("pcap", "p-CAP test for a subgroup");
  pcap->add_option("group", groupspec, "builtin name or @path")->required();
  pcap->add_option("--subgroup", sub_gens, "subgroup generator, cycle notation")
      ->required();
  pcap->add_option("--p", prime, "the prime p")->required();

  auto* icpc = app.add_subcommand("icpc", "ICPC test for a subgroup");
  icpc->add_option("group", groupspec, "builtin name or @path")->required();
  icpc->add_option("--subgroup", sub_gens, "subgroup generator, cycle notation")
      ->required();
  icpc->add_option("--p", prime, "the prime p")->required();

  auto* chief_cmd = app.add_subcommand("chief", "chief factor pairs and series");
  chief_cmd->add_option("group", groupspec, "builtin name or @path")->required();
  chief_cmd->add_flag("--series", series, "also enumerate chief series");

  std::string theorem_id, catalogue = "default", out_path, format = "table";
  uint64_t max_order = 0;
  unsigned jobs = 0;
  auto* theorem = app.add_subcommand("theorem", "run theorem/lemma sweeps");
  theorem->add_option("id", theorem_id, "theorem id or 'all'")->required();
  theorem->add_option("--catalogue", catalogue, "default or manifest path");
  theorem->add_option("--max-order", max_order, "skip groups above this order");
  theorem->add_option("--jobs", jobs, "worker threads");
  theorem->add_option("--out", out_path, "write report to file");
  theorem->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    global_caps() = Caps::from_env();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::reverse(args.begin(), args.end()); // CLI11 consumes reversed argv
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (props->parsed())
      return run_props(groupspec, out);
    if (pcap->parsed())
      return run_pcap(groupspec, sub_gens, prime, out);
    if (icpc->parsed())
      return run_icpc(groupspec, sub_gens, prime, out);
    if (chief_cmd->parsed())
      return run_chief(groupspec, series, out);
    if (theorem->parsed())
      return run_theorem(theorem_id, catalogue, max_order, jobs, out_path,
                         format, out, err);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

} // namespace chief
