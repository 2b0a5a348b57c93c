#ifndef SETMEANS_MEANS_HPP
#define SETMEANS_MEANS_HPP

#include <functional>
#include <string>
#include <vector>

#include "setmeans/set.hpp"

namespace setmeans {

// Exact value, or an enclosure when Cantor weights are incommensurable.
struct MeanValue {
  bool exact = true;
  Rat value;
  Rat lo, hi;  // equal to value when exact
};

struct DomainVerdict {
  bool in_domain = true;
  std::string reason;  // "NotAnSSet", "FiniteSetOutOfDomain", ...
};

struct MeanResult {
  DomainVerdict verdict;
  std::optional<MeanValue> value;  // present iff in_domain
};

struct MeanSpec {
  std::string id;
  std::function<DomainVerdict(const CanonicalSet&)> dom;
  std::function<MeanValue(const CanonicalSet&)> eval;  // pre: dom passed
  std::vector<std::string> declared;
};

// Direct evaluators; throw OutOfDomainError (reason inside) when dom fails.
MeanValue avg(const CanonicalSet& h);
Rat mlis(const CanonicalSet& h);
Rat macc_fds(const CanonicalSet& h);
Rat midrange(const CanonicalSet& h);

const std::vector<MeanSpec>& mean_registry();
const MeanSpec& mean_spec(const std::string& id);  // throws UnknownMeanError

MeanResult mean_eval(const std::string& id, const CanonicalSet& h);

}  // namespace setmeans

#endif
