#include "stepcount/env.h"

#include <algorithm>

namespace stepcount {
namespace {

bool IsCanonical(std::string_view name) {
  return std::none_of(name.begin(), name.end(),
                      [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

VarEnv::VarEnv(std::initializer_list<Binding> bindings) {
  for (const auto& [name, value] : bindings) Store(name, value);
}

VarEnv VarEnv::FromBindings(std::vector<Binding> bindings) {
  VarEnv out;
  out.bindings_ = std::move(bindings);
  return out;
}

const Value* VarEnv::Lookup(std::string_view name) const {
  if (!IsCanonical(name)) return Lookup(CanonicalSymbol(name));
  for (const auto& binding : bindings_) {
    if (binding.first == name) return &binding.second;
  }
  return nullptr;
}

void VarEnv::Store(std::string_view name, Value value) {
  if (!IsCanonical(name)) return Store(CanonicalSymbol(name), std::move(value));
  for (auto& binding : bindings_) {
    if (binding.first == name) {
      binding.second = std::move(value);
      return;
    }
  }
  bindings_.emplace_back(std::string(name), std::move(value));
}

VarEnv VarEnv::With(std::string_view name, Value value) const {
  VarEnv out = *this;
  out.Store(name, std::move(value));
  return out;
}

}  // namespace stepcount
