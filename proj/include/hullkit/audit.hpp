#ifndef HULLKIT_AUDIT_HPP
#define HULLKIT_AUDIT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hullkit {

/// Outcome of one check. `pass`/`fail` are hard verdicts that drive exit
/// status; `claim_holds`/`claim_violated` are informational observations
/// about documented size claims and never affect exit status; `skipped`
/// marks a check whose prerequisite failed.
enum class Verdict { pass, fail, skipped, claim_holds, claim_violated };

inline const char* verdict_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    case Verdict::claim_holds: return "claim-holds";
    case Verdict::claim_violated: return "claim-violated";
  }
  return "?";
}

inline bool is_hard_fail(Verdict v) { return v == Verdict::fail; }

/// One named check with its verdict, measured quantities, an optional
/// witness tuple (element ids in a fixed documented order) and a free-form
/// note for human readers.
struct AuditResult {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<std::pair<std::string, std::int64_t>> data;  // insertion-ordered
  std::vector<std::int64_t> witness;
  std::string note;
  std::vector<std::pair<std::string, Verdict>> steps;  // sub-verdicts, if any

  void put(const std::string& key, std::int64_t value) { data.emplace_back(key, value); }
  std::int64_t get(const std::string& key) const {
    for (const auto& [k, v] : data)
      if (k == key) return v;
    return -1;
  }
};

/// How identity scans cover their domain: exhaustively when the tuple
/// count fits the budget, otherwise with seeded uniform samples.
struct ScanPolicy {
  std::uint64_t max_exhaustive = 1ull << 20;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;

  bool exhaustive_for(std::uint64_t tuple_count) const { return tuple_count <= max_exhaustive; }
  /// Independent deterministic sub-stream for a named task.
  ScanPolicy derived(std::uint64_t tag) const;
};

/// Deterministic 64-bit generator. Bounded draws use rejection-free
/// modular reduction on purpose: the tiny bias is irrelevant for identity
/// scans and the byte streams stay identical across platforms, which the
/// reporting layer depends on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform-ish draw in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

inline ScanPolicy ScanPolicy::derived(std::uint64_t tag) const {
  Rng mix(seed ^ (0xa076'1d64'78bd'642full + tag * 0xe703'7ed1'a0b4'28dbull));
  ScanPolicy out = *this;
  out.seed = mix.next();
  return out;
}

}  // namespace hullkit

#endif  // HULLKIT_AUDIT_HPP
