#ifndef STEPCOUNT_ORACLES_H_
#define STEPCOUNT_ORACLES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stepcount/env.h"
#include "stepcount/interpreter.h"
#include "stepcount/value.h"

namespace stepcount {

// Number of times n can be halved (rounding down) before reaching 0:
// Log2(0) = 0, Log2(n) = 1 + Log2(n / 2). For n >= 1 this is floor(lg n) + 1,
// one more than the usual integer logarithm.
std::uint64_t Log2(std::uint64_t n);

// Final state of the recursive binary search: whether the key was found,
// the last low/mid/high, and how many recursive calls were made.
struct BSTrace {
  bool success = false;
  Integer low;
  std::optional<Integer> mid;  // unset until the first midpoint
  Integer high;
  std::uint64_t calls = 0;

  friend bool operator==(const BSTrace&, const BSTrace&) = default;
};

// Recursive binary search for `key` in lst[low..high] that carries the loop
// variables of the iterative program along with a call count. Stops with
// failure when high < low or low is negative.
BSTrace RecursiveBsHelper(const Integer& key, std::span<const Integer> lst, Integer low,
                          std::optional<Integer> mid, Integer high, std::uint64_t calls);
// Index of `key` found by RecursiveBsHelper over the whole list, or -1.
Integer RecursiveBs(const Integer& key, std::span<const Integer> lst);

// The same search without the carried state.
Integer RecursiveBs2Helper(const Integer& key, std::span<const Integer> lst,
                           const Integer& low, const Integer& high);
Integer RecursiveBs2(const Integer& key, std::span<const Integer> lst);

// True if every element of `lst` is an integer (NIL counts as the empty list).
bool IsNumberList(const Value& lst);
// True if `lst` is a list of integers in nondecreasing order.
bool IsSorted(const Value& lst);
bool IsSorted(std::span<const Integer> lst);

// Extracts the integers of a number list. Requires IsNumberList(lst).
std::vector<Integer> ToIntegers(const Value& lst);

// The outcome the binary-search program must produce when run from `vars`
// holding `key` and `lst`: LOW, HIGH, MID and RESULT stored in that order
// (MID only once a midpoint was computed), with
//   steps = 25 + 26 * calls  when the key is found, and
//   steps = 13 + 26 * calls  when it is not.
// The second law is a property of this cost model, checked against the
// interpreter rather than taken as given.
struct PredictedOutcome {
  RunStatus status = RunStatus::kReturned;
  VarEnv vars;
  std::uint64_t steps = 0;

  RunOutcome AsRunOutcome() const { return {status, vars, steps}; }
};

inline constexpr std::uint64_t kHitBase = 25;
inline constexpr std::uint64_t kMissBase = 13;
inline constexpr std::uint64_t kStepsPerCall = 26;

PredictedOutcome PredictBinarySearch(const Integer& key, std::span<const Integer> lst,
                                     const VarEnv& vars);

}  // namespace stepcount

#endif  // STEPCOUNT_ORACLES_H_
