#include "stepcount/complexity.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "stepcount/interpreter.h"
#include "stepcount/oracles.h"
#include "stepcount/reader.h"

namespace stepcount {
namespace {

constexpr std::array<std::pair<BoundClass, std::string_view>, 5> kClassNames{{
    {BoundClass::kConstant, "constant"},
    {BoundClass::kLog2, "log2"},
    {BoundClass::kLinear, "linear"},
    {BoundClass::kNLog2N, "nlog2n"},
    {BoundClass::kQuadratic, "quadratic"},
}};

std::uint64_t CeilDiv(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

void ValidateSamples(std::span<const SweepSample> samples) {
  if (samples.empty()) throw BoundCheckError("no samples to check");
  for (const SweepSample& s : samples) {
    if (s.timed_out) {
      throw BoundCheckError("sample at n = " + std::to_string(s.n) +
                            " timed out; timed-out runs cannot be bounded");
    }
    if (s.n == 0) throw BoundCheckError("sample sizes must be positive");
  }
}

std::vector<SweepSample> SortedByN(std::span<const SweepSample> samples) {
  std::vector<SweepSample> out(samples.begin(), samples.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const SweepSample& a, const SweepSample& b) { return a.n < b.n; });
  return out;
}

std::uint64_t ParseUnsigned(std::string_view field, const char* what, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw CsvError("line " + std::to_string(line) + ": " + what +
                   " is not a nonnegative integer: '" + std::string(field) + "'");
  }
  return v;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      return fields;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace

std::string_view BoundClassName(BoundClass g) {
  for (const auto& [candidate, name] : kClassNames) {
    if (candidate == g) return name;
  }
  return "?";
}

std::optional<BoundClass> BoundClassFromName(std::string_view name) {
  for (const auto& [g, spelling] : kClassNames) {
    if (spelling == name) return g;
  }
  return std::nullopt;
}

std::uint64_t BoundValue(BoundClass g, std::uint64_t n) {
  switch (g) {
    case BoundClass::kConstant:
      return 1;
    case BoundClass::kLog2:
      return Log2(n);
    case BoundClass::kLinear:
      return n;
    case BoundClass::kNLog2N:
      return n * Log2(n);
    case BoundClass::kQuadratic:
      return n * n;
  }
  return 0;
}

std::vector<Integer> CanonicalProbes(std::span<const Integer> lst) {
  if (lst.empty()) return {Integer(0)};
  std::vector<Integer> sorted(lst.begin(), lst.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Integer> probes;
  probes.reserve(2 * sorted.size() + 1);
  probes.push_back(sorted.front() - 1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    probes.push_back(sorted[i]);
    if (i + 1 < sorted.size() && sorted[i] + 1 < sorted[i + 1]) {
      probes.push_back(sorted[i] + 1);
    }
  }
  probes.push_back(sorted.back() + 1);
  return probes;
}

SweepSample WorstCaseSteps(const ProgramFamily& family, std::uint64_t n,
                           std::uint64_t count) {
  if (n == 0) throw std::invalid_argument("sweep sizes must be positive");
  StmtPtr program = family.Program();
  std::vector<Integer> lst = family.list_builder(n);
  std::vector<Integer> probes = CanonicalProbes(lst);

  // The environment is built once; only KEY changes between probes.
  VarEnv env = family.input_builder(n, Value::Int(probes.front()));
  SweepSample worst;
  worst.n = n;
  bool first = true;
  for (const Integer& probe : probes) {
    Value key = Value::Int(probe);
    env.Store("KEY", key);
    RunOutcome outcome = Run(*program, RunStatus::kOk, env, 0, count);
    if (outcome.status == RunStatus::kError) {
      throw std::runtime_error(family.name + " raised an error at n = " +
                               std::to_string(n) + ", key = " +
                               FormatValue(key));
    }
    if (outcome.status == RunStatus::kTimedOut) worst.timed_out = true;
    if (first || outcome.steps > worst.steps) {
      worst.steps = outcome.steps;
      worst.probe = std::move(key);
      first = false;
    }
  }
  return worst;
}

std::vector<SweepSample> Sweep(const ProgramFamily& family,
                               std::span<const std::uint64_t> sizes) {
  std::vector<std::uint64_t> ordered(sizes.begin(), sizes.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  std::vector<SweepSample> samples;
  samples.reserve(ordered.size());
  for (std::uint64_t n : ordered) {
    samples.push_back(WorstCaseSteps(family, n, SweepClock(n)));
  }
  return samples;
}

std::vector<std::uint64_t> LinearGrid(std::uint64_t n_min, std::uint64_t n_max,
                                      std::uint64_t step) {
  if (step == 0) throw std::invalid_argument("grid step must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = n_min; n <= n_max; n += step) {
    out.push_back(n);
    if (n_max - n < step) break;
  }
  return out;
}

std::vector<std::uint64_t> GeometricGrid(std::uint64_t n_min, std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  if (n_min > n_max) return out;
  out.push_back(n_min);
  for (std::uint64_t p = 1; p != 0 && p < n_max; p <<= 1) {
    if (p > n_min) out.push_back(p);
  }
  if (n_max != n_min) out.push_back(n_max);
  return out;
}

BoundVerdict CheckBound(std::span<const SweepSample> samples, BoundClass g,
                        WitnessPair witness) {
  ValidateSamples(samples);
  if (witness.c == 0 || witness.n0 == 0) {
    throw BoundCheckError("witness constants must be positive integers");
  }
  BoundVerdict verdict;
  for (const SweepSample& s : SortedByN(samples)) {
    verdict.n_max_checked = std::max(verdict.n_max_checked, s.n);
    if (s.n < witness.n0) continue;
    ++verdict.samples_checked;
    std::uint64_t bound = witness.c * BoundValue(g, s.n);
    if (s.steps > bound && verdict.pass) {
      verdict.pass = false;
      verdict.first_violation = s;
      verdict.violated_bound = bound;
    }
  }
  return verdict;
}

std::optional<WitnessPair> FindWitnesses(std::span<const SweepSample> samples,
                                         BoundClass g, std::uint64_t c_max,
                                         std::uint64_t n0_max) {
  ValidateSamples(samples);
  std::vector<SweepSample> sorted = SortedByN(samples);

  // suffix_c[i]: the least c covering sorted[i..]; 0 marks "no c works".
  constexpr std::uint64_t kInfeasible = 0;
  std::vector<std::uint64_t> suffix_c(sorted.size() + 1, 1);
  for (std::size_t i = sorted.size(); i-- > 0;) {
    std::uint64_t gn = BoundValue(g, sorted[i].n);
    std::uint64_t need = gn == 0 ? kInfeasible
                                 : std::max<std::uint64_t>(1, CeilDiv(sorted[i].steps, gn));
    bool feasible = need != kInfeasible && suffix_c[i + 1] != kInfeasible;
    suffix_c[i] = feasible ? std::max(need, suffix_c[i + 1]) : kInfeasible;
  }

  // Between consecutive sampled sizes the constraint set does not change,
  // so the smallest n0 for the suffix starting at sorted[i] is one past the
  // previous sampled size.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i].n == sorted[i - 1].n) continue;
    std::uint64_t n0 = i == 0 ? 1 : sorted[i - 1].n + 1;
    if (n0 > n0_max) break;
    std::uint64_t c = suffix_c[i];
    if (c != kInfeasible && c <= c_max) return WitnessPair{c, n0};
  }
  return std::nullopt;
}

std::optional<Classification> Classify(std::span<const SweepSample> samples,
                                       std::uint64_t c_max, std::uint64_t n0_max) {
  ValidateSamples(samples);
  for (BoundClass g : kBoundClasses) {
    if (auto witness = FindWitnesses(samples, g, c_max, n0_max)) {
      return Classification{g, *witness};
    }
  }
  return std::nullopt;
}

void WriteSweepCsv(std::ostream& out, std::span<const SweepSample> samples) {
  out << "n,steps,probe,timed_out\n";
  for (const SweepSample& s : samples) {
    out << s.n << ',' << s.steps << ',' << FormatValue(s.probe) << ','
        << (s.timed_out ? 1 : 0) << '\n';
  }
}

std::vector<SweepSample> ReadSweepCsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::vector<SweepSample> samples;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = Trim(line);
    if (row.empty()) continue;
    if (!saw_header) {
      if (row != "n,steps,probe,timed_out") {
        throw CsvError("line " + std::to_string(line_no) +
                       ": expected header n,steps,probe,timed_out");
      }
      saw_header = true;
      continue;
    }
    std::vector<std::string_view> fields = SplitFields(row);
    if (fields.size() != 4) {
      throw CsvError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                     std::to_string(fields.size()));
    }
    SweepSample s;
    s.n = ParseUnsigned(fields[0], "n", line_no);
    if (s.n == 0) throw CsvError("line " + std::to_string(line_no) + ": n must be positive");
    s.steps = ParseUnsigned(fields[1], "steps", line_no);
    try {
      s.probe = ParseValue(fields[2]);
    } catch (const SyntaxError& e) {
      throw CsvError("line " + std::to_string(line_no) + ": bad probe: " + e.what());
    }
    std::uint64_t flag = ParseUnsigned(fields[3], "timed_out", line_no);
    if (flag > 1) {
      throw CsvError("line " + std::to_string(line_no) + ": timed_out must be 0 or 1");
    }
    s.timed_out = flag == 1;
    samples.push_back(std::move(s));
  }
  if (!saw_header) throw CsvError("empty CSV: missing header");
  return samples;
}

}  // namespace stepcount
