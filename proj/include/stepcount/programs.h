#ifndef STEPCOUNT_PROGRAMS_H_
#define STEPCOUNT_PROGRAMS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stepcount/env.h"
#include "stepcount/syntax.h"
#include "stepcount/value.h"

namespace stepcount {

// Iterative binary search. `key` and `lst` are spliced in wherever the
// program reads the key or the list. Leaves LOW, HIGH and MID in the
// environment and returns the index of the key, or -1.
StmtPtr BinarySearch(ExprPtr key, ExprPtr lst);

// Binary search with the `key < lst[mid]` test ahead of the equality test.
// Same results, but moving to the upper half costs one more test than
// moving to the lower half.
StmtPtr BinarySearchAlt(ExprPtr key, ExprPtr lst);

// Left-to-right scan:
//   i := 0; while i < len(lst) { if key == lst[i] return i; i := i + 1 };
//   return -1
StmtPtr LinearSearch(ExprPtr key, ExprPtr lst);

// (0, 2, 4, ..., 2(n-1)). Odd values fall in the gaps.
std::vector<Integer> EvenList(std::size_t n);
Value IntegerList(std::span<const Integer> values);

// A search program that reads its inputs from the variables KEY and LST.
struct ProgramFamily {
  std::string name;
  std::function<StmtPtr(ExprPtr key, ExprPtr lst)> build;
  // Environment ((KEY . probe) (LST . list of length n)).
  std::function<VarEnv(std::size_t n, const Value& probe)> input_builder;
  // Sorted list the input builder searches; probes are derived from it.
  std::function<std::vector<Integer>(std::size_t n)> list_builder;

  // build((var key), (var lst)).
  StmtPtr Program() const;
};

// "binarysearch", "binarysearch-alt", "linear-search".
std::span<const ProgramFamily> Families();
// nullptr if no family has that name.
const ProgramFamily* FindFamily(std::string_view name);

// A family searching EvenList(n) with the given builder.
ProgramFamily MakeFamily(std::string name,
                         std::function<StmtPtr(ExprPtr, ExprPtr)> build);

}  // namespace stepcount

#endif  // STEPCOUNT_PROGRAMS_H_
