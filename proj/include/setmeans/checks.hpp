#ifndef SETMEANS_CHECKS_HPP
#define SETMEANS_CHECKS_HPP

#include <string>
#include <vector>

#include "setmeans/means.hpp"
#include "setmeans/plfunc.hpp"
#include "setmeans/set.hpp"

namespace setmeans {

enum class Verdict { Holds, Violated, Inapplicable };
const char* verdict_name(Verdict v);

struct PropertyReport {
  std::string property, mean;
  Verdict verdict = Verdict::Holds;
  std::string detail;  // grade, gating reason or witness description
  std::vector<std::pair<std::string, std::string>> values;  // label -> exact value
  std::vector<std::string> sets;  // DSL forms of the witness sets
  long trials = 1;
  unsigned long long seed = 0;
};

enum class Ideal { FiniteSets, CountableSets };
bool ideal_member(const CanonicalSet& h, Ideal ideal);

// Highest internality grade; detail is one of "strict-strong", "strong",
// "internal", or "fails(<level>): ...". The verdict reflects the levels the
// mean declares.
PropertyReport internality_check(const std::string& mean, const CanonicalSet& h);

PropertyReport invariance_check(const std::string& mean, const CanonicalSet& h,
                                const Rat& alpha, const Rat& beta);

PropertyReport point_symmetry_check(const std::string& mean, const CanonicalSet& h);

// kind: monotone | strong-monotone | disjoint | part-shift | mean-monotone |
// strong-mean-monotone | base | countable-base | union | d-monotone.
// Set roles by kind: {H1,H2} / {H,K1,K2} / {A,B,C} / {L,B} / n-ary family.
PropertyReport monotonicity_check(const std::string& kind, const std::string& mean,
                                  const std::vector<CanonicalSet>& sets,
                                  const Rat& x = 0);

struct ScanRow {
  Rat x;
  bool in_domain = false;
  bool exact = true;
  Rat value, lo, hi;
  std::string reason;
};
struct ScanResult {
  std::vector<ScanRow> rows;
  std::vector<std::pair<Rat, Rat>> jumps;  // adjacent grid x-pairs
};
ScanResult slice_scan(const std::string& mean, const CanonicalSet& h, const Rat& from,
                      const Rat& to, const Rat& step, SliceSide side);

struct ProbeResult {
  std::vector<std::optional<Rat>> values;
  std::optional<Rat> limit;
  Verdict verdict = Verdict::Inapplicable;
  std::string detail;
};
ProbeResult point_cont_probe(const std::string& mean, const CanonicalSet& h, const Rat& x,
                             const std::vector<Rat>& eps);

struct ChainResult {
  std::vector<std::optional<Rat>> values;
  std::optional<Rat> tail_value;
  bool hypothesis_ok = true;  // chain inclusions verified exactly
  Verdict verdict = Verdict::Inapplicable;  // Holds = converging to tail
  std::string detail;
};
ChainResult cantor_chain_probe(const std::string& mean,
                               const std::vector<CanonicalSet>& chain,
                               const CanonicalSet& tail);

ChainResult fcont_probe(const std::string& mean, const CanonicalSet& h,
                        const std::vector<PLFunc>& fns,
                        const std::optional<PLFunc>& f_limit,
                        const CanonicalSet& limit_image);

PropertyReport independence_check(const std::string& mean, const CanonicalSet& h,
                                  const CanonicalSet& v, Ideal ideal);

// variant: "self" (h2 unused) or "part".
PropertyReport shift_invariance_check(const std::string& variant, const std::string& mean,
                                      const CanonicalSet& h1, const CanonicalSet& h2,
                                      const Rat& x);

PropertyReport condensed_check(const std::string& mean, const CanonicalSet& h);

PropertyReport convexity_check(const std::string& mean, const CanonicalSet& h,
                               const CanonicalSet& l, const Interval& i);

struct RootResult {
  Rat x;
  Rat residual;
  Rat bracket_lo, bracket_hi;
  bool jump = false;  // residual sign-changes without vanishing (slice jump)
};
// mode: "mean-value" | "fixed-point". Throws NoSignChangeError.
RootResult slice_mean_root(const std::string& mean, const CanonicalSet& h,
                           const std::string& mode, const Rat& tol);

PropertyReport shrink_to_point_probe(const std::string& mean,
                                     const std::vector<CanonicalSet>& sets, const Rat& x);

// Removes a finite point set from h; nullopt when a point is interior to an
// Interval or CantorPiece atom (result leaves the representable class).
std::optional<CanonicalSet> diff_finite(const CanonicalSet& h,
                                        const std::vector<Rat>& points);

// items 1-7 of the domain-closure checklist, tested on seeded instances;
// 8-9 reported unsupported-by-class.
std::vector<std::pair<std::string, std::string>> dom_closure_report(const std::string& mean);

}  // namespace setmeans

#endif
