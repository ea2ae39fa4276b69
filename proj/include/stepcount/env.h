#ifndef STEPCOUNT_ENV_H_
#define STEPCOUNT_ENV_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stepcount/value.h"

namespace stepcount {

// Ordered variable association list.
//
// Lookup finds the first binding of a name. Store overwrites the first
// binding in place, or appends a new binding at the end.
class VarEnv {
 public:
  using Binding = std::pair<std::string, Value>;

  VarEnv() = default;
  VarEnv(std::initializer_list<Binding> bindings);
  // Keeps the bindings verbatim, duplicates included (first one wins on
  // lookup). Names must already be canonical.
  static VarEnv FromBindings(std::vector<Binding> bindings);

  // Returns nullptr if `name` is unbound. Names are case-insensitive.
  const Value* Lookup(std::string_view name) const;
  void Store(std::string_view name, Value value);
  // Functional form of Store.
  VarEnv With(std::string_view name, Value value) const;

  const std::vector<Binding>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  friend bool operator==(const VarEnv&, const VarEnv&) = default;

 private:
  std::vector<Binding> bindings_;
};

}  // namespace stepcount

#endif  // STEPCOUNT_ENV_H_
