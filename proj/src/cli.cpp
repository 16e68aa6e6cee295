#include "hullkit/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hullkit/commutator.hpp"
#include "hullkit/corpus.hpp"
#include "hullkit/errors.hpp"
#include "hullkit/families.hpp"
#include "hullkit/group_io.hpp"
#include "hullkit/report.hpp"
#include "hullkit/schur.hpp"
#include "hullkit/trace.hpp"

namespace hullkit {

namespace {

// Flags shared by the single-target subcommands; audit-all keeps its own
// copy with a smaller default order cap (it multiplies work per group).
struct TargetArgs {
  std::string group_spec;
  std::string subgroup_text;
  std::string component_text;
  int max_order = kDefaultOrderCap;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
  bool timings = false;
  int threads = 0;
};

void add_report_flags(CLI::App* cmd, TargetArgs& a) {
  cmd->add_option("--max-order", a.max_order, "largest group order accepted");
  cmd->add_option("--seed", a.seed, "seed for sampled scans")->envname("HULLKIT_SEED");
  cmd->add_option("--out", a.out_path, "write the report to this file instead of stdout");
  cmd->add_option("--format", a.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--timings", a.timings,
                "include wall-clock times per record (forfeits byte-identical reports)");
}

CLI::App* add_target_command(CLI::App& app, const std::string& name, const std::string& desc,
                             TargetArgs& a, bool subgroup_required, bool wants_component) {
  CLI::App* cmd = app.add_subcommand(name, desc);
  cmd->add_option("--group", a.group_spec, "group file, or family:<spec>")->required();
  CLI::Option* sub = cmd->add_option(
      "--subgroup", a.subgroup_text,
      "comma-separated generators of H (cycle notation, or element ids for table groups)");
  if (subgroup_required) sub->required();
  if (wants_component)
    cmd->add_option("--component", a.component_text,
                    "comma-separated generators of the distinguished normal subgroup N")
        ->required();
  add_report_flags(cmd, a);
  return cmd;
}

/// Splits a generator list on commas that sit outside parentheses, so
/// cycle notation like "(1 2 3),(1 2)" and product labels like
/// "((1 2), 3)" both survive.
std::vector<std::string> split_generator_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  parts.push_back(current);
  std::vector<std::string> trimmed;
  for (std::string& p : parts) {
    const auto begin = p.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = p.find_last_not_of(" \t");
    trimmed.push_back(p.substr(begin, end - begin + 1));
  }
  return trimmed;
}

FiniteGroup group_from_spec(const std::string& spec, int max_order) {
  if (spec.rfind("family:", 0) == 0) return build_family_spec(spec.substr(7), max_order);
  return load_group_file(spec, max_order);
}

Subgroup subgroup_from_text(const FiniteGroup& g, const std::string& text) {
  std::vector<Elem> gens;
  for (const std::string& token : split_generator_list(text))
    gens.push_back(g.element_by_name(token));
  return Subgroup::closure(g, std::move(gens));
}

std::vector<std::string> labels_of(const FiniteGroup& g, const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Elem e : elems) out.push_back(g.label(e));
  return out;
}

template <typename Fn>
void append_record(AuditReport& report, const std::string& group, const std::string& subgroup,
                   const std::string& component, bool timings, Fn&& build) {
  const auto start = std::chrono::steady_clock::now();
  AuditRecord rec;
  rec.group = group;
  rec.subgroup = subgroup;
  rec.component = component;
  build(rec);
  if (timings)
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  report.records.push_back(std::move(rec));
}

int emit_report(const AuditReport& report, const TargetArgs& a, std::ostream& out,
                std::ostream& err) {
  const std::string text = a.format == "text" ? report.to_text() : report.to_json();
  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << a.out_path << "' for writing\n";
      return 2;
    }
    file << text;
    file.flush();
    if (!file.good()) {
      err << "error: writing '" << a.out_path << "' failed\n";
      return 2;
    }
  } else {
    out << text;
  }
  return report.exit_code();
}

AuditReport start_report(const std::string& command, const TargetArgs& a) {
  AuditReport report;
  report.command = command;
  report.seed = a.seed;
  report.timings = a.timings;
  return report;
}

// ---- subcommand bodies ----------------------------------------------------

AuditReport run_hull(const TargetArgs& a) {
  const FiniteGroup g = group_from_spec(a.group_spec, a.max_order);
  const Subgroup h = subgroup_from_text(g, a.subgroup_text);
  AuditReport report = start_report("hull", a);

  append_record(report, a.group_spec, h.describe(), "", a.timings, [&](AuditRecord& rec) {
    rec.result = hull_equivalence_audit(g, h);
    const Subgroup hull = normal_hull(g, h, HullConstruction::minimal_normal_closure).hull;
    rec.sets["subgroup"] = labels_of(g, h.elements());
    rec.sets["hull"] = labels_of(g, hull.elements());
  });
  append_record(report, a.group_spec, h.describe(), "", a.timings, [&](AuditRecord& rec) {
    rec.result = hull_decomposition_audit(g, h);
    const Subgroup commutators = commutator_subgroup(g, whole_group(g), h);
    rec.sets["commutator"] = labels_of(g, commutators.elements());
  });
  return report;
}

AuditReport run_commutator(const TargetArgs& a) {
  const FiniteGroup g = group_from_spec(a.group_spec, a.max_order);
  const Subgroup h =
      a.subgroup_text.empty() ? whole_group(g) : subgroup_from_text(g, a.subgroup_text);
  AuditReport report = start_report("commutator", a);

  append_record(report, a.group_spec, h.describe(), "", a.timings, [&](AuditRecord& rec) {
    const Subgroup whole = whole_group(g);
    const std::vector<Elem> values = commutator_values(g, whole, h);
    const Subgroup comm = Subgroup::closure(g, values);
    AuditResult r;
    r.name = "commutator-subgroup";
    r.put("subgroup-order", h.order());
    r.put("commutator-order", comm.order());
    r.put("distinct-values", static_cast<std::int64_t>(values.size()));
    const bool normal = comm.is_normal();
    r.put("is-normal", normal ? 1 : 0);
    if (!normal) {
      r.verdict = Verdict::fail;
      r.note = "(G,H) is not normal in G";
    }
    rec.result = std::move(r);
    rec.sets["values"] = labels_of(g, values);
    rec.sets["elements"] = labels_of(g, comm.elements());
  });
  return report;
}

AuditReport run_width(const TargetArgs& a) {
  const FiniteGroup g = group_from_spec(a.group_spec, a.max_order);
  const Subgroup h = subgroup_from_text(g, a.subgroup_text);
  AuditReport report = start_report("width", a);

  append_record(report, a.group_spec, h.describe(), "", a.timings, [&](AuditRecord& rec) {
    const std::vector<Elem> values = commutator_values(g, whole_group(g), h);
    const Subgroup target = Subgroup::closure(g, values);
    AuditResult r;
    r.name = "width";
    r.put("width", width(g, target, values));
    r.put("target-order", target.order());
    r.put("distinct-values", static_cast<std::int64_t>(values.size()));
    rec.result = std::move(r);
    rec.sets["target"] = labels_of(g, target.elements());
    rec.sets["values"] = labels_of(g, values);
  });
  return report;
}

AuditReport run_schur(const TargetArgs& a) {
  const FiniteGroup g = group_from_spec(a.group_spec, a.max_order);
  const Subgroup h =
      a.subgroup_text.empty() ? whole_group(g) : subgroup_from_text(g, a.subgroup_text);
  AuditReport report = start_report("schur", a);
  const std::string hd = h.describe();

  // may throw InternalCheckError -> exit 3; its invariants are theorems
  const SchurContext ctx = schur_context(g, h);
  ScanPolicy policy;
  policy.seed = a.seed;

  append_record(report, a.group_spec, hd, "", a.timings, [&](AuditRecord& rec) {
    AuditResult r;
    r.name = "schur-context";
    r.put("centralizer-order", ctx.c.order());
    r.put("core-order", ctx.k.order());
    r.put("n", ctx.n);
    r.put("plain-values", static_cast<std::int64_t>(ctx.plain_set.size()));
    r.put("sigma-values", static_cast<std::int64_t>(ctx.sigma_set.size()));
    r.put("rewrite-threshold", ctx.rewrite_threshold());
    rec.result = std::move(r);
    rec.sets["centralizer"] = labels_of(g, ctx.c.elements());
    rec.sets["core"] = labels_of(g, ctx.k.elements());
    rec.sets["plain-commutators"] = labels_of(g, ctx.plain_set);
    rec.sets["sigma-commutators"] = labels_of(g, ctx.sigma_set);
  });
  append_record(report, a.group_spec, hd, "", a.timings,
                [&](AuditRecord& rec) { rec.result = power_in_core_audit(ctx); });
  append_record(report, a.group_spec, hd, "", a.timings,
                [&](AuditRecord& rec) { rec.result = plain_cardinality_claim(ctx); });
  append_record(report, a.group_spec, hd, "", a.timings,
                [&](AuditRecord& rec) { rec.result = sigma_cardinality_claim(ctx); });

  std::optional<AuditResult> short_form;
  append_record(report, a.group_spec, hd, "", a.timings, [&](AuditRecord& rec) {
    PowerIdentityAudit audit = power_identity_check(ctx, policy);
    short_form = std::move(audit.short_form);
    rec.result = std::move(audit.identity);
  });
  append_record(report, a.group_spec, hd, "", a.timings,
                [&](AuditRecord& rec) { rec.result = std::move(*short_form); });
  append_record(report, a.group_spec, hd, "", a.timings, [&](AuditRecord& rec) {
    rec.result = reduce_words_audit(ctx, 1000, 64, a.seed);
  });
  return report;
}

AuditReport run_trace(const TargetArgs& a) {
  const FiniteGroup g = group_from_spec(a.group_spec, a.max_order);
  const Subgroup component = subgroup_from_text(g, a.component_text);
  const ComponentedGroup cg(g, component);  // NotNormalError -> exit 2
  const Subgroup h = subgroup_from_text(g, a.subgroup_text);
  AuditReport report = start_report("trace", a);
  const std::string hd = h.describe();
  const std::string nd = component.describe();

  ScanPolicy policy;
  policy.seed = a.seed;
  std::optional<ProofTrace> trace;
  append_record(report, a.group_spec, hd, nd, a.timings, [&](AuditRecord& rec) {
    trace.emplace(run_proof_trace(cg, h, policy));
    rec.result = trace_summary(*trace);
    for (const TraceStep& step : trace->steps)
      for (const auto& [key, elems] : step.sets) rec.sets[key] = labels_of(g, elems);
  });
  append_record(report, a.group_spec, hd, nd, a.timings, [&](AuditRecord& rec) {
    if (trace->completed) {
      rec.result = width_bound_audit(*trace);
    } else {
      rec.result.name = "width-bound";
      rec.result.verdict = Verdict::skipped;
      rec.result.note = "dependent step skipped";
    }
  });
  append_record(report, a.group_spec, hd, nd, a.timings,
                [&](AuditRecord& rec) { rec.result = absorption_equality_audit(cg, h); });
  return report;
}

AuditReport run_audit_all(const TargetArgs& a) {
  CorpusOptions options;
  options.max_order = a.max_order;
  options.seed = a.seed;
  options.timings = a.timings;
  options.threads = a.threads;
  return run_full_audit(options);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"commutator hulls, Schur-type width bounds, and their audits on finite groups"};
  app.name("hullkit");
  app.require_subcommand(1);

  TargetArgs single;
  TargetArgs bulk;
  bulk.max_order = 200;  // corpus cap; single-target commands allow larger groups

  CLI::App* hull_cmd = add_target_command(
      app, "hull", "normal hull of H in G, both constructions, with decomposition checks",
      single, /*subgroup_required=*/true, /*wants_component=*/false);
  CLI::App* commutator_cmd = add_target_command(
      app, "commutator", "commutator subgroup (G,H); H defaults to G itself", single,
      /*subgroup_required=*/false, /*wants_component=*/false);
  CLI::App* width_cmd = add_target_command(
      app, "width", "exact commutator width of (G,H) over the plain commutator values", single,
      /*subgroup_required=*/true, /*wants_component=*/false);
  CLI::App* schur_cmd = add_target_command(
      app, "schur", "centralizer-core context, cardinality claims, and word rewriting", single,
      /*subgroup_required=*/false, /*wants_component=*/false);
  CLI::App* trace_cmd = add_target_command(
      app, "trace", "replay the staged hull argument on (G, N, H)", single,
      /*subgroup_required=*/true, /*wants_component=*/true);

  CLI::App* audit_cmd =
      app.add_subcommand("audit-all", "run every audit over the built-in corpus");
  add_report_flags(audit_cmd, bulk);
  audit_cmd->add_option("--threads", bulk.threads,
                        "worker threads (default: hardware concurrency; never affects output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (audit_cmd->parsed()) return emit_report(run_audit_all(bulk), bulk, out, err);
    if (hull_cmd->parsed()) return emit_report(run_hull(single), single, out, err);
    if (commutator_cmd->parsed()) return emit_report(run_commutator(single), single, out, err);
    if (width_cmd->parsed()) return emit_report(run_width(single), single, out, err);
    if (schur_cmd->parsed()) return emit_report(run_schur(single), single, out, err);
    if (trace_cmd->parsed()) return emit_report(run_trace(single), single, out, err);
    err << "error: no subcommand\n";
    return 2;
  } catch (const InternalCheckError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrderCapError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotNormalError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hullkit
