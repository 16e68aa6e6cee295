#include "hullkit/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <utility>

#include "hullkit/commutator.hpp"
#include "hullkit/errors.hpp"
#include "hullkit/families.hpp"
#include "hullkit/group_io.hpp"
#include "hullkit/schur.hpp"
#include "hullkit/subgroups.hpp"
#include "hullkit/trace.hpp"

namespace hullkit {

namespace {

// Groups up to this order get every 2-generated subgroup and every normal
// subgroup; above it the lists are thinned (see strided below).
constexpr int kFullTierLimit = 48;
constexpr std::size_t kSampledSubgroups = 16;
constexpr std::size_t kSampledComponents = 4;
// The 2-generator enumeration is cross-checked against the 3-generator one
// up to this order; beyond it the cubic subset scan stops being cheap.
constexpr int kCrossCheckLimit = 24;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

// Stable per-task scan policy: same corpus entry + audit name -> same
// sample stream, no matter how tasks land on threads.
ScanPolicy tagged(const ScanPolicy& base, const std::string& tag) {
  return base.derived(fnv1a(tag));
}

// Evenly strided thinning that always keeps the first and the last entry
// (the trivial subgroup and the whole group, given the sort order).
std::vector<Subgroup> strided(const std::vector<Subgroup>& all, std::size_t want) {
  if (all.size() <= want || want < 2) return all;
  std::vector<Subgroup> out;
  out.reserve(want);
  std::size_t prev = all.size();
  for (std::size_t i = 0; i < want; ++i) {
    std::size_t idx = i * (all.size() - 1) / (want - 1);
    if (idx != prev) out.push_back(all[idx]);
    prev = idx;
  }
  return out;
}

struct GroupPlan {
  const CorpusEntry* entry = nullptr;
  std::vector<Subgroup> subgroups;   // audit pairs (G, H)
  std::vector<Subgroup> components;  // normal subgroups used as N in traces
  std::int64_t total_subgroups = 0;  // counts before any thinning
  std::int64_t total_normals = 0;
};

GroupPlan make_plan(const CorpusEntry& entry) {
  GroupPlan plan;
  plan.entry = &entry;
  std::vector<Subgroup> subs = enumerate_subgroups(entry.group, 2);
  std::vector<Subgroup> normals;
  for (const Subgroup& s : subs)
    if (s.is_normal()) normals.push_back(s);
  plan.total_subgroups = static_cast<std::int64_t>(subs.size());
  plan.total_normals = static_cast<std::int64_t>(normals.size());
  if (entry.sampled) {
    subs = strided(subs, kSampledSubgroups);
    normals = strided(normals, kSampledComponents);
  }
  plan.subgroups = std::move(subs);
  plan.components = std::move(normals);
  return plan;
}

// Runs one audit builder, stamps the result with its target descriptors
// and (when enabled) its wall time, and appends the record.
template <typename Fn>
void append_timed(std::vector<AuditRecord>& out, const std::string& group,
                  const std::string& subgroup, const std::string& component, bool timings,
                  Fn&& build) {
  const auto start = std::chrono::steady_clock::now();
  AuditRecord rec;
  rec.group = group;
  rec.subgroup = subgroup;
  rec.component = component;
  rec.result = build();
  if (timings)
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  out.push_back(std::move(rec));
}

AuditResult skipped_record(const std::string& name) {
  AuditResult r;
  r.name = name;
  r.verdict = Verdict::skipped;
  r.note = "dependent step skipped";
  return r;
}

// ---- per-group records ------------------------------------------------

std::vector<AuditRecord> group_records(const GroupPlan& plan, const CorpusOptions& opt,
                                       const ScanPolicy& base) {
  const FiniteGroup& g = plan.entry->group;
  const std::string& name = plan.entry->name;
  std::vector<AuditRecord> out;
  out.reserve(4);
  auto add = [&](auto&& build) {
    append_timed(out, name, "", "", opt.timings, std::forward<decltype(build)>(build));
  };

  add([&] {
    AuditResult r;
    r.name = "group-axioms";
    r.put("order", g.order());
    if (auto diagnostic = g.check_axioms()) {
      r.verdict = Verdict::fail;
      r.note = *diagnostic;
    }
    return r;
  });

  add([&] {
    return conjugation_identity_audits(g, tagged(base, name + "|conjugation-identities"));
  });

  add([&] {
    AuditResult r;
    r.name = "roundtrip";
    r.put("order", g.order());
    try {
      if (!parse_group_file(to_cayley_file(g), g.order()).same_table(g)) {
        r.verdict = Verdict::fail;
        r.note = "reparsed table differs from the source group";
      }
    } catch (const std::exception& e) {
      r.verdict = Verdict::fail;
      r.note = e.what();
    }
    return r;
  });

  add([&] {
    AuditResult r;
    r.name = "subgroup-enumeration";
    r.put("subgroup-count", plan.total_subgroups);
    r.put("normal-count", plan.total_normals);
    if (plan.subgroups.empty() || plan.subgroups.front().order() != 1 ||
        plan.subgroups.back().order() != g.order()) {
      r.verdict = Verdict::fail;
      r.note = "enumeration is missing the trivial subgroup or the whole group";
      return r;
    }
    const bool cross_check = g.order() <= kCrossCheckLimit;
    r.put("triple-cross-check", cross_check ? 1 : 0);
    if (cross_check) {
      // Every subgroup reachable from 3 generators must already be in the
      // 2-generator list; both lists share the (order, elements) sort.
      std::vector<Subgroup> two = enumerate_subgroups(g, 2);
      std::vector<Subgroup> three = enumerate_subgroups(g, 3);
      bool same = two.size() == three.size();
      for (std::size_t i = 0; same && i < two.size(); ++i)
        same = two[i].same_elements(three[i]);
      if (!same) {
        r.verdict = Verdict::fail;
        r.note = "3-generator enumeration found subgroups the 2-generator one missed";
        r.witness = {static_cast<std::int64_t>(two.size()),
                     static_cast<std::int64_t>(three.size())};
      }
    }
    return r;
  });

  return out;
}

// ---- per-pair records ---------------------------------------------------

std::vector<AuditRecord> pair_records(const GroupPlan& plan, const Subgroup& h,
                                      const CorpusOptions& opt, const ScanPolicy& base) {
  const FiniteGroup& g = plan.entry->group;
  const std::string& name = plan.entry->name;
  const std::string hd = h.describe();
  const std::string tag = name + "|" + hd + "|";
  std::vector<AuditRecord> out;
  out.reserve(10);
  auto add = [&](auto&& build) {
    append_timed(out, name, hd, "", opt.timings, std::forward<decltype(build)>(build));
  };

  add([&] { return hull_equivalence_audit(g, h); });
  add([&] { return hull_decomposition_audit(g, h); });
  add([&] { return conjugation_invariance_audit(g, h); });

  std::optional<SchurContext> ctx;
  add([&] {
    AuditResult r;
    r.name = "schur-context";
    try {
      ctx.emplace(schur_context(g, h));
      r.put("centralizer-order", ctx->c.order());
      r.put("core-order", ctx->k.order());
      r.put("n", ctx->n);
      r.put("plain-values", static_cast<std::int64_t>(ctx->plain_set.size()));
      r.put("sigma-values", static_cast<std::int64_t>(ctx->sigma_set.size()));
      r.put("rewrite-threshold", ctx->rewrite_threshold());
    } catch (const InternalCheckError& e) {
      r.verdict = Verdict::fail;
      r.note = e.what();
    }
    return r;
  });

  if (!ctx) {
    for (const char* dep : {"power-in-core", "claim-plain-n2", "claim-sigma-n3",
                            "power-identity", "claim-short-power-identity", "reduce-words"})
      add([&] { return skipped_record(dep); });
    return out;
  }

  add([&] { return power_in_core_audit(*ctx); });
  add([&] { return plain_cardinality_claim(*ctx); });
  add([&] { return sigma_cardinality_claim(*ctx); });

  // one scan yields both the hard identity record and the informational
  // short-form record
  std::optional<AuditResult> short_form;
  add([&] {
    PowerIdentityAudit audit = power_identity_check(*ctx, tagged(base, tag + "power-identity"));
    short_form = std::move(audit.short_form);
    return std::move(audit.identity);
  });
  add([&] { return std::move(*short_form); });

  add([&] {
    return reduce_words_audit(*ctx, opt.words_per_context, opt.max_word_length,
                              tagged(base, tag + "reduce-words").seed);
  });

  return out;
}

// ---- per-triple records -------------------------------------------------

std::vector<AuditRecord> trace_records(const GroupPlan& plan, const Subgroup& component,
                                       const Subgroup& h, const CorpusOptions& opt,
                                       const ScanPolicy& base) {
  const FiniteGroup& g = plan.entry->group;
  const std::string& name = plan.entry->name;
  const std::string nd = component.describe();
  const std::string hd = h.describe();
  std::vector<AuditRecord> out;
  out.reserve(3);
  auto add = [&](auto&& build) {
    append_timed(out, name, hd, nd, opt.timings, std::forward<decltype(build)>(build));
  };

  ComponentedGroup cg(g, component);  // normal by plan construction
  std::optional<ProofTrace> trace;
  add([&] {
    trace.emplace(run_proof_trace(cg, h, tagged(base, name + "|" + nd + "|" + hd + "|trace")));
    return trace_summary(*trace);
  });
  add([&] {
    return trace->completed ? width_bound_audit(*trace) : skipped_record("width-bound");
  });
  add([&] { return absorption_equality_audit(cg, h); });
  return out;
}

}  // namespace

std::vector<CorpusEntry> build_corpus(int max_order) {
  std::vector<std::string> specs;
  for (int n = 1; n <= 48; ++n) specs.push_back("cyclic:" + std::to_string(n));
  for (int n = 1; n <= 24; ++n) specs.push_back("dihedral:" + std::to_string(n));
  for (int n = 1; n <= 4; ++n) specs.push_back("symmetric:" + std::to_string(n));
  for (int n = 3; n <= 4; ++n) specs.push_back("alternating:" + std::to_string(n));
  specs.push_back("quaternion8");
  // Direct products: abelian non-cyclic, nonabelian x abelian, and
  // nonabelian x nonabelian shapes, then three larger sampled entries.
  // product(alternating:4,cyclic:2) and product(dihedral:4,cyclic:2) are
  // deliberately absent: both contain an elementary-abelian order-8
  // subgroup that needs three generators, which the 2-generator subgroup
  // enumeration (by design) cannot see.
  specs.insert(specs.end(), {
                                "product(cyclic:2,cyclic:2)",
                                "product(cyclic:2,product(cyclic:2,cyclic:2))",
                                "product(cyclic:6,cyclic:2)",
                                "product(quaternion8,cyclic:2)",
                                "product(symmetric:3,cyclic:3)",
                                "product(dihedral:4,cyclic:3)",
                                "product(alternating:4,cyclic:3)",
                                "product(symmetric:3,symmetric:3)",
                                "product(dihedral:4,dihedral:4)",
                                "product(dihedral:5,dihedral:5)",
                                "product(symmetric:4,symmetric:3)",
                            });

  std::vector<CorpusEntry> corpus;
  corpus.reserve(specs.size());
  for (const std::string& spec : specs) {
    try {
      FiniteGroup g = build_family_spec(spec, max_order);
      const bool sampled = g.order() > kFullTierLimit;
      corpus.push_back(CorpusEntry{"family:" + spec, std::move(g), sampled});
    } catch (const OrderCapError&) {
      // entry above the requested cap: not part of this run's corpus
    }
  }
  return corpus;
}

AuditReport run_full_audit(const CorpusOptions& options) {
  ScanPolicy base;
  base.seed = options.seed;

  std::vector<CorpusEntry> corpus = build_corpus(options.max_order);
  std::vector<GroupPlan> plans;
  plans.reserve(corpus.size());
  for (const CorpusEntry& entry : corpus) plans.push_back(make_plan(entry));

  // Fixed task list = fixed record order; workers only pick who computes
  // which slot, never what goes where.
  struct Task {
    std::string group, subgroup, component;
    std::function<std::vector<AuditRecord>()> run;
  };
  std::vector<Task> tasks;
  for (const GroupPlan& plan : plans) {
    tasks.push_back(
        {plan.entry->name, "", "", [&plan, &options, &base] {
           return group_records(plan, options, base);
         }});
    for (const Subgroup& h : plan.subgroups)
      tasks.push_back(
          {plan.entry->name, h.describe(), "", [&plan, &h, &options, &base] {
             return pair_records(plan, h, options, base);
           }});
    for (const Subgroup& n : plan.components)
      for (const Subgroup& h : plan.subgroups)
        tasks.push_back(
            {plan.entry->name, h.describe(), n.describe(), [&plan, &n, &h, &options, &base] {
               return trace_records(plan, n, h, options, base);
             }});
  }

  std::vector<std::vector<AuditRecord>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        slots[i] = tasks[i].run();
      } catch (const std::exception& e) {
        // An audit threw instead of reporting: surface it as a hard fail
        // bound to the objects the task was responsible for.
        AuditRecord rec;
        rec.group = tasks[i].group;
        rec.subgroup = tasks[i].subgroup;
        rec.component = tasks[i].component;
        rec.result.name = "internal-error";
        rec.result.verdict = Verdict::fail;
        rec.result.note = e.what();
        slots[i] = {std::move(rec)};
      }
    }
  };

  std::size_t thread_count =
      options.threads > 0 ? static_cast<std::size_t>(options.threads)
                          : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  thread_count = std::min(thread_count, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  AuditReport report;
  report.command = "audit-all";
  report.seed = options.seed;
  report.timings = options.timings;
  for (std::vector<AuditRecord>& slot : slots)
    for (AuditRecord& rec : slot) report.records.push_back(std::move(rec));
  return report;
}

}  // namespace hullkit
