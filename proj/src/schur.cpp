#include "hullkit/schur.hpp"

#include <algorithm>
#include <string>

#include "hullkit/commutator.hpp"
#include "hullkit/errors.hpp"

namespace hullkit {

std::int64_t SchurContext::rewrite_threshold() const {
  std::int64_t n4 = static_cast<std::int64_t>(n) * n * n * n;
  std::int64_t pigeonhole = static_cast<std::int64_t>(sigma_set.size()) * n;
  return std::max(n4, pigeonhole);
}

SchurContext schur_context(const FiniteGroup& g, const Subgroup& h) {
  Subgroup c = centralizer(g, h);
  Subgroup k = normal_core(g, c);
  int n = g.order() / k.order();

  if (!k.is_normal())
    throw InternalCheckError("schur context: normal core is not normal in G");
  for (Elem e : k.elements())
    if (!c.contains(e))
      throw InternalCheckError("schur context: core element " + g.label(e) +
                               " lies outside the centralizer");
  for (Elem x = 0; x < g.order(); ++x)
    if (!k.contains(g.pow(x, n)))
      throw InternalCheckError("schur context: " + g.label(x) + "^" + std::to_string(n) +
                               " lies outside the normal core");
  // K centralizes every conjugate of H. Checking the generators of K
  // against the conjugated generators of H is equivalent: centralizers are
  // subgroups, and centralizing a generating set centralizes its closure.
  for (Elem conj_by = 0; conj_by < g.order(); ++conj_by)
    for (Elem ke : k.generators())
      for (Elem he : h.generators()) {
        Elem s = g.conj(conj_by, he);
        if (g.mul(ke, s) != g.mul(s, ke))
          throw InternalCheckError("schur context: core element " + g.label(ke) +
                                   " does not centralize " + g.label(s));
      }

  SchurContext ctx{&g, h, std::move(c), std::move(k), n, {}, {}};
  ctx.plain_set = commutator_values(g, whole_group(g), h);

  // sigma_set = union over c of c·plain_set·c^-1, by the transport
  // identity [g, c·h·c^-1] = c·[c^-1·g·c, h]·c^-1 (as g runs over G, so
  // does c^-1·g·c, so conjugating the plain set by c gives exactly the
  // values with conjugator c).
  std::vector<char> seen(g.order(), 0);
  for (Elem conj_by = 0; conj_by < g.order(); ++conj_by)
    for (Elem v : ctx.plain_set) {
      Elem w = g.conj(conj_by, v);
      if (!seen[w]) {
        seen[w] = 1;
        ctx.sigma_set.push_back(w);
      }
    }
  std::sort(ctx.sigma_set.begin(), ctx.sigma_set.end());
  return ctx;
}

AuditResult plain_cardinality_claim(const SchurContext& ctx) {
  AuditResult r;
  r.name = "claim-plain-n2";
  std::int64_t bound = static_cast<std::int64_t>(ctx.n) * ctx.n;
  r.put("size", static_cast<std::int64_t>(ctx.plain_set.size()));
  r.put("bound", bound);
  r.put("n", ctx.n);
  r.verdict = static_cast<std::int64_t>(ctx.plain_set.size()) <= bound ? Verdict::claim_holds
                                                                       : Verdict::claim_violated;
  if (r.verdict == Verdict::claim_violated)
    r.note = "more distinct plain commutator values than n^2";
  return r;
}

AuditResult sigma_cardinality_claim(const SchurContext& ctx) {
  AuditResult r;
  r.name = "claim-sigma-n3";
  std::int64_t bound = static_cast<std::int64_t>(ctx.n) * ctx.n * ctx.n;
  r.put("size", static_cast<std::int64_t>(ctx.sigma_set.size()));
  r.put("bound", bound);
  r.put("n", ctx.n);
  r.verdict = static_cast<std::int64_t>(ctx.sigma_set.size()) <= bound ? Verdict::claim_holds
                                                                       : Verdict::claim_violated;
  if (r.verdict == Verdict::claim_violated)
    r.note = "more distinct conjugated commutator values than n^3";
  return r;
}

namespace {

WordFactor evaluate_factor(const SchurContext& ctx, Elem g, Elem c, Elem h) {
  const FiniteGroup& grp = *ctx.group;
  return WordFactor{g, c, h, grp.commutator(g, grp.conj(c, h))};
}

Elem fold_product(const SchurContext& ctx, const std::vector<WordFactor>& factors) {
  const FiniteGroup& grp = *ctx.group;
  Elem p = grp.identity();
  for (const WordFactor& f : factors) p = grp.mul(p, f.value);
  return p;
}

}  // namespace

CommutatorWord make_word(const SchurContext& ctx,
                         const std::vector<DecoratedCommutator>& factors) {
  const FiniteGroup& grp = *ctx.group;
  CommutatorWord w;
  w.factors.reserve(factors.size());
  for (const DecoratedCommutator& d : factors) {
    if (d.g < 0 || d.g >= grp.order() || d.c < 0 || d.c >= grp.order())
      throw FormatError("decorated commutator component outside the group");
    if (d.h < 0 || d.h >= grp.order() || !ctx.h.contains(d.h))
      throw FormatError("decorated commutator h-component " + std::to_string(d.h) +
                        " is not in H");
    w.factors.push_back(evaluate_factor(ctx, d.g, d.c, d.h));
  }
  w.product = fold_product(ctx, w.factors);
  return w;
}

CommutatorWord random_word(const SchurContext& ctx, Rng& rng, int length) {
  const FiniteGroup& grp = *ctx.group;
  CommutatorWord w;
  w.factors.reserve(length);
  const std::vector<Elem>& hs = ctx.h.elements();
  for (int i = 0; i < length; ++i) {
    Elem g = static_cast<Elem>(rng.below(grp.order()));
    Elem c = static_cast<Elem>(rng.below(grp.order()));
    Elem h = hs[rng.below(hs.size())];
    w.factors.push_back(evaluate_factor(ctx, g, c, h));
  }
  w.product = fold_product(ctx, w.factors);
  return w;
}

ReduceOutcome reduce_word(const SchurContext& ctx, CommutatorWord word) {
  const FiniteGroup& grp = *ctx.group;
  const int n = ctx.n;
  const std::int64_t threshold = ctx.rewrite_threshold();
  const Elem original_product = word.product;
  int steps = 0;

  std::vector<int> counts(grp.order(), 0);
  while (static_cast<std::int64_t>(word.factors.size()) > threshold) {
    // most frequent factor value; ties break to the smallest element id
    for (const WordFactor& f : word.factors) ++counts[f.value];
    Elem v = 0;
    int best = -1;
    for (Elem e = 0; e < grp.order(); ++e)
      if (counts[e] > best) {
        best = counts[e];
        v = e;
      }
    std::fill(counts.begin(), counts.end(), 0);
    if (best < n + 1)
      throw InternalCheckError(
          "rewrite: pigeonhole failed — most frequent value has multiplicity " +
          std::to_string(best) + " < n+1");

    // shuffle the first n+1 occurrences of v to the front; bypassed
    // factors are conjugated by v^-1 and re-decorated in place
    Elem vinv = grp.inv(v);
    for (int k = 0; k <= n; ++k) {
      std::size_t p = k;
      while (word.factors[p].value != v) ++p;
      WordFactor moved = word.factors[p];
      for (std::size_t i = p; i > static_cast<std::size_t>(k); --i) {
        const WordFactor& old = word.factors[i - 1];
        WordFactor re = evaluate_factor(ctx, grp.conj(vinv, old.g), grp.mul(vinv, old.c), old.h);
        if (re.value != grp.conj(vinv, old.value))
          throw InternalCheckError("rewrite: re-decoration changed the conjugated value");
        word.factors[i] = re;
      }
      word.factors[k] = moved;
    }
    if (fold_product(ctx, word.factors) != original_product)
      throw InternalCheckError("rewrite: shuffle phase changed the word's product");

    // replace the front block v^(n+1), using the decoration of its first
    // factor: [g,s]^(n+1) = [g,s²]·[s·g·s^-1, s]^(n-1) with s = c·h·c^-1
    const WordFactor front = word.factors[0];
    Elem s = grp.conj(front.c, front.h);
    Elem vn = grp.pow(v, n);
    if (grp.mul(vn, s) != grp.mul(s, vn))
      throw InternalCheckError(
          "rewrite: [g,s]^n does not commute with s — impossible, since [g,s]^n lies in the "
          "normal core, which centralizes every conjugate of H");

    std::vector<WordFactor> block;
    block.reserve(n);
    block.push_back(evaluate_factor(ctx, front.g, front.c, grp.mul(front.h, front.h)));
    Elem g_twisted = grp.conj(s, front.g);
    for (int i = 0; i < n - 1; ++i)
      block.push_back(evaluate_factor(ctx, g_twisted, front.c, front.h));
    if (fold_product(ctx, block) != grp.pow(v, n + 1))
      throw InternalCheckError("rewrite: replacement block does not multiply to v^(n+1)");

    word.factors.erase(word.factors.begin(), word.factors.begin() + (n + 1));
    word.factors.insert(word.factors.begin(), block.begin(), block.end());
    word.product = fold_product(ctx, word.factors);
    if (word.product != original_product)
      throw InternalCheckError("rewrite: replacement step changed the word's product");
    ++steps;
  }

  return ReduceOutcome{std::move(word), steps, threshold};
}

int width(const FiniteGroup& g, const Subgroup& target, const std::vector<Elem>& generators) {
  std::vector<Elem> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Elem v : gens)
    if (v < 0 || v >= g.order() || !target.contains(v))
      throw FormatError("generators do not span target");

  std::vector<int> dist(g.order(), -1);
  std::vector<Elem> frontier{g.identity()};
  dist[g.identity()] = 0;
  int reached = 1;
  int level = 0;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    ++level;
    for (Elem x : frontier)
      for (Elem v : gens) {
        Elem y = g.mul(x, v);
        if (dist[y] < 0) {
          dist[y] = level;
          next.push_back(y);
          ++reached;
        }
      }
    frontier = std::move(next);
  }

  if (reached != target.order()) throw FormatError("generators do not span target");
  int w = 0;
  for (Elem e : target.elements()) {
    if (dist[e] < 0) throw FormatError("generators do not span target");
    w = std::max(w, dist[e]);
  }
  return w;
}

PowerIdentityAudit power_identity_check(const SchurContext& ctx, const ScanPolicy& policy) {
  const FiniteGroup& g = *ctx.group;
  const int n = ctx.n;
  const std::vector<Elem>& hs = ctx.h.elements();

  PowerIdentityAudit out;
  out.identity.name = "power-identity";
  out.short_form.name = "claim-short-power-identity";

  std::uint64_t short_checked = 0, short_failures = 0;
  std::uint64_t checked = 0;

  auto check = [&](Elem x, Elem c, Elem h) {
    Elem s = g.conj(c, h);
    Elem v = g.commutator(x, s);
    Elem vn = g.pow(v, n);
    if (out.identity.verdict == Verdict::pass && g.mul(vn, s) != g.mul(s, vn)) {
      out.identity.verdict = Verdict::fail;
      out.identity.witness = {0, x, c, h};
      out.identity.note = "commuting precondition failed; witness = (part, g, c, h)";
    }
    Elem lhs = g.mul(vn, v);  // v^(n+1)
    Elem head = g.commutator(x, g.mul(s, s));
    Elem tail = g.commutator(g.conj(s, x), s);
    if (out.identity.verdict == Verdict::pass && lhs != g.mul(head, g.pow(tail, n - 1))) {
      out.identity.verdict = Verdict::fail;
      out.identity.witness = {1, x, c, h};
      out.identity.note = "power identity failed; witness = (part, g, c, h)";
    }
    ++short_checked;
    if (lhs != g.mul(head, tail)) {
      if (short_failures == 0) out.short_form.witness = {x, c, h};
      ++short_failures;
    }
    ++checked;
  };

  std::uint64_t tuple_count =
      static_cast<std::uint64_t>(g.order()) * g.order() * hs.size();
  bool exhaustive = policy.exhaustive_for(tuple_count);
  if (exhaustive) {
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem c = 0; c < g.order(); ++c)
        for (Elem h : hs) check(x, c, h);
  } else {
    Rng rng(policy.seed);
    for (std::uint64_t i = 0; i < policy.samples; ++i)
      check(static_cast<Elem>(rng.below(g.order())), static_cast<Elem>(rng.below(g.order())),
            hs[rng.below(hs.size())]);
  }

  out.identity.put("n", n);
  out.identity.put("tuples-checked", static_cast<std::int64_t>(checked));
  out.identity.put("exhaustive", exhaustive);

  out.short_form.verdict = short_failures == 0 ? Verdict::claim_holds : Verdict::claim_violated;
  out.short_form.put("tuples-checked", static_cast<std::int64_t>(short_checked));
  out.short_form.put("failures", static_cast<std::int64_t>(short_failures));
  if (short_failures > 0)
    out.short_form.note =
        "two-factor power identity (exponent 1 instead of n-1) does not hold here";
  return out;
}

AuditResult power_in_core_audit(const SchurContext& ctx) {
  const FiniteGroup& g = *ctx.group;
  AuditResult r;
  r.name = "power-in-core";
  r.put("n", ctx.n);
  r.put("core-order", ctx.k.order());
  for (Elem x = 0; x < g.order(); ++x)
    if (!ctx.k.contains(g.pow(x, ctx.n))) {
      r.verdict = Verdict::fail;
      r.witness = {x};
      r.note = "g^n escaped the normal core";
      return r;
    }
  return r;
}

AuditResult reduce_words_audit(const SchurContext& ctx, int words, int max_length,
                               std::uint64_t seed) {
  const FiniteGroup& g = *ctx.group;
  AuditResult r;
  r.name = "reduce-words";
  const std::int64_t threshold = ctx.rewrite_threshold();
  const std::int64_t n4 = static_cast<std::int64_t>(ctx.n) * ctx.n * ctx.n * ctx.n;
  r.put("words", words);
  r.put("max-length", max_length);
  r.put("threshold", threshold);
  r.put("n4-sufficed", n4 >= threshold ? 1 : 0);

  Rng rng(seed);
  std::int64_t total_steps = 0;
  std::int64_t longest_output = 0;
  try {
    for (int w = 0; w < words; ++w) {
      const int length = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_length) + 1));
      CommutatorWord word = random_word(ctx, rng, length);
      const Elem wanted = word.product;
      ReduceOutcome outcome = reduce_word(ctx, std::move(word));
      total_steps += outcome.rewrite_steps;
      const auto out_len = static_cast<std::int64_t>(outcome.word.factors.size());
      longest_output = std::max(longest_output, out_len);
      const bool product_ok = outcome.word.product == wanted;
      // short words come back untouched; long ones land under the bound
      const bool length_ok = length <= threshold ? out_len == length : out_len <= threshold;
      if (!product_ok || !length_ok) {
        r.verdict = Verdict::fail;
        r.note = product_ok ? "reduced word exceeds the length bound"
                            : "reduced word changed its product";
        r.witness = {w, length, out_len};
        break;
      }
    }
  } catch (const std::exception& e) {  // a rewriting-step assertion fired
    r.verdict = Verdict::fail;
    r.note = e.what();
  }
  r.put("rewrite-steps", total_steps);
  r.put("longest-output", longest_output);

  if (r.verdict == Verdict::pass) {
    // The plain commutator width of (G,H) must sit under the same bound.
    Subgroup target = Subgroup::closure(g, ctx.plain_set);
    const int plain_width = width(g, target, ctx.plain_set);
    r.put("plain-width", plain_width);
    if (plain_width > threshold) {
      r.verdict = Verdict::fail;
      r.note = "plain commutator width exceeds the rewrite bound";
    }
  }
  return r;
}

}  // namespace hullkit
