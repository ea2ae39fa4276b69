#include "stepcount/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "stepcount/complexity.h"
#include "stepcount/interpreter.h"
#include "stepcount/oracle_check.h"
#include "stepcount/programs.h"
#include "stepcount/reader.h"

namespace stepcount {
namespace {

using Json = nlohmann::ordered_json;

// Bad input discovered after argument parsing; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<SweepSample> LoadSamples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return ReadSweepCsv(in);
  } catch (const CsvError& e) {
    throw InputError(path + ": " + e.what());
  }
}

BoundClass ParseClass(const std::string& name) {
  if (auto g = BoundClassFromName(name)) return *g;
  throw InputError("unknown bound class '" + name +
                   "' (expected constant, log2, linear, nlog2n or quadratic)");
}

std::uint64_t MaxN(const std::vector<SweepSample>& samples) {
  std::uint64_t n = 0;
  for (const SweepSample& s : samples) n = std::max(n, s.n);
  return n;
}

std::string BoundText(BoundClass g, std::uint64_t c) {
  if (g == BoundClass::kConstant) return std::to_string(c);
  if (g == BoundClass::kLinear) return std::to_string(c) + " * n";
  if (g == BoundClass::kNLog2N) return std::to_string(c) + " * n * log2(n)";
  if (g == BoundClass::kQuadratic) return std::to_string(c) + " * n^2";
  return std::to_string(c) + " * log2(n)";
}

Json ViolationJson(const BoundVerdict& verdict) {
  if (!verdict.first_violation) return nullptr;
  const SweepSample& s = *verdict.first_violation;
  return Json{{"n", s.n},
              {"steps", s.steps},
              {"probe", FormatValue(s.probe)},
              {"bound", verdict.violated_bound}};
}

int CmdRun(const std::string& program_path, const std::string& vars_path,
           std::uint64_t count, std::ostream& out) {
  StmtPtr program = ParseStmt(ReadFile(program_path));
  VarEnv vars = vars_path.empty() ? VarEnv() : ParseEnv(ReadFile(vars_path));
  RunOutcome outcome = Run(*program, RunStatus::kOk, std::move(vars), 0, count);
  out << FormatRunOutcome(outcome) << '\n';
  return kExitOk;
}

int CmdSweep(const std::string& family_name, std::uint64_t n_min, std::uint64_t n_max,
             std::uint64_t n_step, bool geometric, const std::string& out_path,
             std::ostream& out) {
  const ProgramFamily* family = FindFamily(family_name);
  if (family == nullptr) {
    throw InputError("unknown family '" + family_name +
                     "' (expected binarysearch, binarysearch-alt or linear-search)");
  }
  if (n_min < 1 || n_min > n_max) throw InputError("need 1 <= n-min <= n-max");
  if (n_step < 1) throw InputError("n-step must be positive");
  std::vector<std::uint64_t> sizes =
      geometric ? GeometricGrid(n_min, n_max) : LinearGrid(n_min, n_max, n_step);
  std::vector<SweepSample> samples = Sweep(*family, sizes);
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write " + out_path);
  WriteSweepCsv(file, samples);
  file.close();
  if (!file) throw InputError("failed writing " + out_path);
  std::size_t timed_out = 0;
  for (const SweepSample& s : samples) timed_out += s.timed_out;
  out << "wrote " << samples.size() << " samples of " << family->name << " (n = "
      << n_min << ".." << n_max << ") to " << out_path;
  if (timed_out > 0) out << ", " << timed_out << " timed out";
  out << '\n';
  return kExitOk;
}

int CmdCheck(const std::string& csv, const std::string& class_name, std::uint64_t c,
             std::uint64_t n0, std::ostream& out) {
  BoundClass g = ParseClass(class_name);
  std::vector<SweepSample> samples = LoadSamples(csv);
  BoundVerdict verdict = CheckBound(samples, g, {c, n0});
  if (verdict.pass) {
    out << "PASS: steps <= " << BoundText(g, c) << " for every sampled n >= " << n0
        << " (" << verdict.samples_checked << " samples; verified for sampled n <= "
        << verdict.n_max_checked << ")\n";
  } else {
    const SweepSample& s = *verdict.first_violation;
    out << "FAIL: at n = " << s.n << ", steps " << s.steps << " > " << BoundText(g, c)
        << " = " << verdict.violated_bound << " (probe " << FormatValue(s.probe)
        << "; verified for sampled n <= " << verdict.n_max_checked << ")\n";
  }
  Json record{{"class", BoundClassName(g)},
              {"c", c},
              {"n0", n0},
              {"n_max_checked", verdict.n_max_checked},
              {"pass", verdict.pass},
              {"first_violation", ViolationJson(verdict)}};
  out << record.dump() << '\n';
  return verdict.pass ? kExitOk : kExitVerdictFailed;
}

int CmdFit(const std::string& csv, const std::string& class_name, std::uint64_t c_max,
           std::uint64_t n0_max, std::ostream& out) {
  BoundClass g = ParseClass(class_name);
  std::vector<SweepSample> samples = LoadSamples(csv);
  std::optional<WitnessPair> witness = FindWitnesses(samples, g, c_max, n0_max);
  std::uint64_t n_max = MaxN(samples);
  Json record{{"class", BoundClassName(g)}};
  if (witness) {
    out << "FIT: steps <= " << BoundText(g, witness->c) << " for every sampled n >= "
        << witness->n0 << " (verified for sampled n <= " << n_max << ")\n";
    record["c"] = witness->c;
    record["n0"] = witness->n0;
  } else {
    out << "NO FIT: no witness for " << BoundClassName(g) << " with c <= " << c_max
        << " and n0 <= " << n0_max << " (sampled n <= " << n_max << ")\n";
    record["c"] = nullptr;
    record["n0"] = nullptr;
  }
  record["n_max_checked"] = n_max;
  record["pass"] = witness.has_value();
  record["first_violation"] = nullptr;
  out << record.dump() << '\n';
  return witness ? kExitOk : kExitVerdictFailed;
}

int CmdClassify(const std::string& csv, std::uint64_t c_max, std::uint64_t n0_max,
                std::ostream& out) {
  std::vector<SweepSample> samples = LoadSamples(csv);
  std::optional<Classification> result = Classify(samples, c_max, n0_max);
  std::uint64_t n_max = MaxN(samples);
  Json record;
  if (result) {
    out << "CLASS: " << BoundClassName(result->bound) << " (steps <= "
        << BoundText(result->bound, result->witness.c) << " for every sampled n >= "
        << result->witness.n0 << "; bounded evidence, verified for sampled n <= "
        << n_max << ")\n";
    record = Json{{"class", BoundClassName(result->bound)},
                  {"c", result->witness.c},
                  {"n0", result->witness.n0}};
  } else {
    out << "NO CLASS: no class admits a witness with c <= " << c_max
        << " and n0 <= " << n0_max << " (sampled n <= " << n_max << ")\n";
    record = Json{{"class", nullptr}, {"c", nullptr}, {"n0", nullptr}};
  }
  record["n_max_checked"] = n_max;
  record["pass"] = result.has_value();
  record["first_violation"] = nullptr;
  out << record.dump() << '\n';
  return result ? kExitOk : kExitVerdictFailed;
}

int CmdOracleCheck(std::uint64_t max_n, std::ostream& out) {
  if (max_n < 1) throw InputError("max-n must be at least 1");
  OracleCheckReport report = RunOracleCheck(max_n);
  out << FormatOracleReport(report) << '\n';
  return report.pass ? kExitOk : kExitVerdictFailed;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Step-counting interpreter and complexity checks", "stepcount"};
  app.require_subcommand(1);

  std::string program_path;
  std::string vars_path;
  std::uint64_t count = 0;
  CLI::App* run = app.add_subcommand("run", "Run a program file and print its outcome");
  run->add_option("--program", program_path, "Program file")->required();
  run->add_option("--vars", vars_path, "Variable alist file");
  run->add_option("--count", count, "Clock (loop re-test budget)")->required();

  std::string family;
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  std::uint64_t n_step = 1;
  bool geometric = false;
  std::string out_path;
  CLI::App* sweep = app.add_subcommand("sweep", "Write worst-case step counts to CSV");
  sweep->add_option("--family", family, "binarysearch, binarysearch-alt, linear-search")
      ->required();
  sweep->add_option("--n-min", n_min, "Smallest list length")->required();
  sweep->add_option("--n-max", n_max, "Largest list length")->required();
  sweep->add_option("--n-step", n_step, "Step between sizes");
  sweep->add_flag("--geometric", geometric, "Powers of two between n-min and n-max");
  sweep->add_option("--out", out_path, "Output CSV")->required();

  std::string csv;
  std::string class_name;
  std::uint64_t c = 0;
  std::uint64_t n0 = 0;
  CLI::App* check = app.add_subcommand("check", "Check steps <= c * g(n) for n >= n0");
  check->add_option("--csv", csv, "Sweep CSV")->required();
  check->add_option("--class", class_name, "Bounding class")->required();
  check->add_option("--c", c, "Witness c")->required();
  check->add_option("--n0", n0, "Witness n0")->required();

  std::uint64_t c_max = kDefaultCMax;
  std::uint64_t n0_max = kDefaultN0Max;
  CLI::App* fit = app.add_subcommand("fit", "Find the smallest witness for a class");
  fit->add_option("--csv", csv, "Sweep CSV")->required();
  fit->add_option("--class", class_name, "Bounding class")->required();
  fit->add_option("--c-max", c_max, "Largest c to accept");
  fit->add_option("--n0-max", n0_max, "Largest n0 to accept");

  CLI::App* classify = app.add_subcommand("classify", "Smallest class with a witness");
  classify->add_option("--csv", csv, "Sweep CSV")->required();
  classify->add_option("--c-max", c_max, "Largest c to accept");
  classify->add_option("--n0-max", n0_max, "Largest n0 to accept");

  std::uint64_t max_n = 0;
  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Check the interpreter against the recursive search oracles");
  oracle->add_option("--max-n", max_n, "Largest list length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return CmdRun(program_path, vars_path, count, out);
    if (sweep->parsed()) {
      return CmdSweep(family, n_min, n_max, n_step, geometric, out_path, out);
    }
    if (check->parsed()) return CmdCheck(csv, class_name, c, n0, out);
    if (fit->parsed()) return CmdFit(csv, class_name, c_max, n0_max, out);
    if (classify->parsed()) return CmdClassify(csv, c_max, n0_max, out);
    if (oracle->parsed()) return CmdOracleCheck(max_n, out);
  } catch (const SyntaxError& e) {
    err << "stepcount: syntax error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "stepcount: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundCheckError& e) {
    err << "stepcount: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "stepcount: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace stepcount
