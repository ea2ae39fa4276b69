#ifndef STEPCOUNT_COMPLEXITY_H_
#define STEPCOUNT_COMPLEXITY_H_

// Finite, executable stand-in for big-O claims. A claim f = O(g) asks for
// positive c and n0 with f(n) <= c * g(n) for every n >= n0. Here n ranges
// only over the sampled sizes, and (c, n0) are searched within explicit
// limits, so every verdict is evidence about the sampled range and nothing
// more.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stepcount/programs.h"
#include "stepcount/value.h"

namespace stepcount {

enum class BoundClass { kConstant, kLog2, kLinear, kNLog2N, kQuadratic };

// Classes from tightest to loosest; Classify tries them in this order.
inline constexpr std::array<BoundClass, 5> kBoundClasses = {
    BoundClass::kConstant, BoundClass::kLog2, BoundClass::kLinear,
    BoundClass::kNLog2N, BoundClass::kQuadratic};

// "constant", "log2", "linear", "nlog2n", "quadratic".
std::string_view BoundClassName(BoundClass g);
std::optional<BoundClass> BoundClassFromName(std::string_view name);

// g(n) for n >= 1: 1, Log2(n), n, n * Log2(n), n * n. Log2 is the halving
// count from oracles.h.
std::uint64_t BoundValue(BoundClass g, std::uint64_t n);

struct WitnessPair {
  std::uint64_t c = 1;
  std::uint64_t n0 = 1;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// Worst observed step count at one input size.
struct SweepSample {
  std::uint64_t n = 1;
  std::uint64_t steps = 0;
  Value probe;
  bool timed_out = false;

  friend bool operator==(const SweepSample&, const SweepSample&) = default;
};

// Every element of `lst`, one value inside each gap between neighbours,
// and one value either side. Ascending. Distinct sorted lists need nothing
// more to drive a comparison search down every path.
std::vector<Integer> CanonicalProbes(std::span<const Integer> lst);

// Clock used by sweeps; enough for every built-in family.
inline std::uint64_t SweepClock(std::uint64_t n) { return n + 2; }

// Runs the family's program on its size-n input for every canonical probe
// and keeps the largest step count (first probe on ties). A timed-out run
// marks the sample. Throws std::runtime_error if any run ends in ERROR.
SweepSample WorstCaseSteps(const ProgramFamily& family, std::uint64_t n,
                           std::uint64_t count);

// WorstCaseSteps at each size with SweepClock, ascending by n, duplicates
// dropped.
std::vector<SweepSample> Sweep(const ProgramFamily& family,
                               std::span<const std::uint64_t> sizes);

// n_min, n_min + step, ... up to n_max.
std::vector<std::uint64_t> LinearGrid(std::uint64_t n_min, std::uint64_t n_max,
                                      std::uint64_t step = 1);
// n_min, every power of two strictly between, and n_max.
std::vector<std::uint64_t> GeometricGrid(std::uint64_t n_min, std::uint64_t n_max);

struct BoundVerdict {
  bool pass = true;
  std::uint64_t n_max_checked = 0;  // largest sampled n
  std::size_t samples_checked = 0;  // samples with n >= n0
  std::optional<SweepSample> first_violation;
  std::uint64_t violated_bound = 0;  // c * g(n) at the violation
};

// Invalid input to the bound checks: no samples, a timed-out sample, or a
// non-positive witness.
class BoundCheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// steps <= c * g(n) for every sample with n >= n0. Vacuously passes when no
// sample reaches n0. The first violation is the one with the smallest n.
BoundVerdict CheckBound(std::span<const SweepSample> samples, BoundClass g,
                        WitnessPair witness);

// Smallest (n0, c), n0 first, with c <= c_max and n0 <= n0_max that passes
// CheckBound on at least one sample. For a given n0 the only candidate is
// c = max ceil(steps / g(n)) over samples with n >= n0.
std::optional<WitnessPair> FindWitnesses(std::span<const SweepSample> samples,
                                         BoundClass g, std::uint64_t c_max,
                                         std::uint64_t n0_max);

struct Classification {
  BoundClass bound;
  WitnessPair witness;
};

inline constexpr std::uint64_t kDefaultCMax = 64;
inline constexpr std::uint64_t kDefaultN0Max = 64;

// First class in kBoundClasses that admits a witness within the limits.
// Samples should span at least a couple of doublings of n to mean anything.
std::optional<Classification> Classify(std::span<const SweepSample> samples,
                                       std::uint64_t c_max = kDefaultCMax,
                                       std::uint64_t n0_max = kDefaultN0Max);

// Sweep CSV: header `n,steps,probe,timed_out`, one row per sample, decimal
// integers, timed_out as 0 or 1.
class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void WriteSweepCsv(std::ostream& out, std::span<const SweepSample> samples);
std::vector<SweepSample> ReadSweepCsv(std::istream& in);

}  // namespace stepcount

#endif  // STEPCOUNT_COMPLEXITY_H_
