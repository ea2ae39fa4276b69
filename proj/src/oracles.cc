#include "stepcount/oracles.h"

#include <utility>

namespace stepcount {
namespace {

// nth with out-of-range indices reading as "no element".
const Integer* Nth(std::span<const Integer> lst, const Integer& index) {
  if (index < 0 || index >= lst.size()) return nullptr;
  return &lst[static_cast<std::size_t>(index)];
}

// Comparisons against a missing element treat it as 0, as Lisp arithmetic
// does for non-numbers.
bool KeyEquals(const Integer& key, const Integer* element) {
  return element != nullptr && key == *element;
}

bool KeyLess(const Integer& key, const Integer* element) {
  return element != nullptr ? key < *element : key < 0;
}

Integer FloorHalf(const Integer& v) {
  Integer q = v / 2;
  if (v < 0 && v % 2 != 0) --q;
  return q;
}

}  // namespace

std::uint64_t Log2(std::uint64_t n) {
  if (n == 0) return 0;
  return 1 + Log2(n / 2);
}

BSTrace RecursiveBsHelper(const Integer& key, std::span<const Integer> lst, Integer low,
                          std::optional<Integer> mid, Integer high, std::uint64_t calls) {
  if (high < low || low < 0) {
    return {false, std::move(low), std::move(mid), std::move(high), calls};
  }
  Integer new_mid = FloorHalf(low + high);
  const Integer* element = Nth(lst, new_mid);
  if (KeyEquals(key, element)) {
    return {true, std::move(low), std::move(new_mid), std::move(high), calls};
  }
  if (KeyLess(key, element)) {
    Integer new_high = new_mid - 1;
    return RecursiveBsHelper(key, lst, std::move(low), std::move(new_mid),
                             std::move(new_high), calls + 1);
  }
  Integer new_low = new_mid + 1;
  return RecursiveBsHelper(key, lst, std::move(new_low), std::move(new_mid),
                           std::move(high), calls + 1);
}

Integer RecursiveBs(const Integer& key, std::span<const Integer> lst) {
  BSTrace trace = RecursiveBsHelper(key, lst, 0, std::nullopt,
                                    Integer(lst.size()) - 1, 0);
  return trace.success ? *trace.mid : Integer(-1);
}

Integer RecursiveBs2Helper(const Integer& key, std::span<const Integer> lst,
                           const Integer& low, const Integer& high) {
  if (high < low || low < 0) return -1;
  Integer new_mid = FloorHalf(low + high);
  const Integer* element = Nth(lst, new_mid);
  if (KeyEquals(key, element)) return new_mid;
  if (KeyLess(key, element)) return RecursiveBs2Helper(key, lst, low, new_mid - 1);
  return RecursiveBs2Helper(key, lst, new_mid + 1, high);
}

Integer RecursiveBs2(const Integer& key, std::span<const Integer> lst) {
  return RecursiveBs2Helper(key, lst, 0, Integer(lst.size()) - 1);
}

bool IsNumberList(const Value& lst) {
  if (!lst.is_list()) return false;
  for (const Value& v : lst.elements()) {
    if (!v.is_int()) return false;
  }
  return true;
}

bool IsSorted(std::span<const Integer> lst) {
  for (std::size_t i = 1; i < lst.size(); ++i) {
    if (lst[i] < lst[i - 1]) return false;
  }
  return true;
}

bool IsSorted(const Value& lst) {
  if (!IsNumberList(lst)) return false;
  return IsSorted(ToIntegers(lst));
}

std::vector<Integer> ToIntegers(const Value& lst) {
  std::vector<Integer> out;
  out.reserve(lst.elements().size());
  for (const Value& v : lst.elements()) out.push_back(v.as_int());
  return out;
}

PredictedOutcome PredictBinarySearch(const Integer& key, std::span<const Integer> lst,
                                     const VarEnv& vars) {
  BSTrace trace = RecursiveBsHelper(key, lst, 0, std::nullopt,
                                    Integer(lst.size()) - 1, 0);
  PredictedOutcome out;
  out.status = RunStatus::kReturned;
  out.vars = vars;
  out.vars.Store("LOW", Value::Int(trace.low));
  out.vars.Store("HIGH", Value::Int(trace.high));
  if (trace.mid) out.vars.Store("MID", Value::Int(*trace.mid));
  if (trace.success) {
    out.vars.Store(kResultVar, Value::Int(*trace.mid));
    out.steps = kHitBase + kStepsPerCall * trace.calls;
  } else {
    out.vars.Store(kResultVar, Value::Int(-1));
    out.steps = kMissBase + kStepsPerCall * trace.calls;
  }
  return out;
}

}  // namespace stepcount
