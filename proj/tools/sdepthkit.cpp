// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdepthkit/sdepthkit.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInapplicable = 2;

// Owns a string returned by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { sdk_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int report_failure(sdk_status status) {
  std::cerr << "sdepthkit: " << sdk_last_error() << '\n';
  return status == SDK_ERR_HYPOTHESIS ? kExitInapplicable : kExitError;
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string label(const std::string& key) {
  if (key == "ideal") return "I";
  if (key == "quotient") return "S/I";
  if (key == "module") return "J/I";
  return key;
}

void print_per_target(const json& values, const char* what) {
  if (!values.contains(what)) return;
  for (const auto& [key, v] : values[what].items()) {
    std::cout << what << '(' << label(key) << ") = " << (v.is_null() ? std::string("-") : v.dump()) << '\n';
  }
}

// Left-justified in `width` columns, counting UTF-8 code points.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t shown = 0;
  for (unsigned char c : s) shown += (c & 0xC0) != 0x80;
  return shown >= width ? s : s + std::string(width - shown, ' ');
}

void print_bounds(const json& bounds) {
  std::printf("%-10s %-6s %-22s %6s %6s  %s\n", "bound", "kind", "target", "value", "exact", "notes");
  for (const auto& b : bounds) {
    std::string notes;
    for (const auto& h : b["hypotheses"]) {
      if (!h["satisfied"].get<bool>()) notes += (notes.empty() ? "fails: " : "; ") + h["description"].get<std::string>();
    }
    if (b.contains("consistent") && !b["consistent"].get<bool>()) notes += notes.empty() ? "VIOLATED" : "; VIOLATED";
    const std::string value = b["value"].is_null() ? "-" : b["value"].dump();
    const std::string exact = b["exact"].is_null() ? "-" : b["exact"].dump();
    std::printf("%-10s %-6s %s %6s %6s  %s\n", b["name"].get<std::string>().c_str(),
                b["kind"].get<std::string>().c_str(), pad(b["target"].get<std::string>(), 22).c_str(), value.c_str(),
                exact.c_str(), notes.c_str());
  }
}

int print_record(const std::string& command, const json& record, bool as_json) {
  const std::string status = record["status"];
  if (as_json) {
    std::cout << record.dump() << '\n';
  }
  if (status == "inapplicable") {
    std::cerr << "sdepthkit: " << record.value("message", "hypothesis not satisfied") << '\n';
    return kExitInapplicable;
  }
  if (status == "skipped") {
    std::cerr << "sdepthkit: resource limit: " << record.value("message", "") << '\n';
    return kExitError;
  }
  const json& values = record["values"];
  int code = kExitOk;
  if (command == "validate") {
    code = values["valid"].get<bool>() ? kExitOk : kExitError;
  }
  if (as_json) return code;

  if (command == "sdepth" || command == "depth" || command == "dim") {
    print_per_target(values, command.c_str());
  } else if (command == "decompose") {
    for (const auto& [key, text] : values["decomposition"].items()) {
      std::cout << "# sdepth(" << label(key) << ") = " << values["sdepth"][key].dump() << '\n'
                << text.get<std::string>();
    }
  } else if (command == "validate") {
    if (values["valid"].get<bool>()) {
      std::cout << "valid, " << values["spaces"].dump() << " spaces, sdepth "
                << (values["sdepth"].is_null() ? std::string("-") : values["sdepth"].dump()) << '\n';
    } else {
      std::cout << "invalid: " << values["violation"].get<std::string>() << " at "
                << values["witness"].get<std::string>() << '\n';
    }
  } else if (command == "bounds" || command == "verify") {
    print_per_target(values, "sdepth");
    if (record.contains("bounds")) print_bounds(record["bounds"]);
    if (values.contains("cor_eg_match")) {
      std::cout << "cor_eg matches exact value: " << (values["cor_eg_match"].get<bool>() ? "yes" : "NO") << '\n';
    }
    for (const auto& p : record.value("predicates", json::array())) {
      std::cout << p["name"].get<std::string>() << ": " << p["lhs"].dump() << " >= " << p["rhs"].dump() << "  "
                << (p["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    }
    if (values.contains("characteristic_disagreement") && values["characteristic_disagreement"].get<bool>()) {
      std::cout << "depth S/I differs between characteristic 0 and 2\n";
    }
  }
  return code;
}

struct RecordSink {
  std::ostream* out;
};

void write_record(const char* line, void* user) {
  auto* sink = static_cast<RecordSink*>(user);
  *sink->out << line << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stanley depth of monomial ideals"};
  app.set_version_flag("--version", std::string(sdk_version()));

  std::string command;
  std::size_t ring = 0;
  std::optional<std::string> ideal, modulo, q1, q2, q3;
  bool as_json = false;
  std::uint32_t characteristic = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_exp = 2;
  std::size_t count = 100;
  std::size_t n_min = 1;
  std::size_t threads = 0;
  double time_limit = 0.0;
  std::string family = "irreducible-pair";
  std::string input = "-";
  std::optional<std::string> out_path, summary_path;

  app.add_option("command", command, "sdepth | depth | dim | decompose | validate | bounds | verify | experiment")
      ->required()
      ->check(CLI::IsMember({"sdepth", "depth", "dim", "decompose", "validate", "bounds", "verify", "experiment"}));
  app.add_option("--ring", ring, "number of variables (for experiment: the largest)")->required()->check(CLI::Range(1, 64));
  app.add_option("--ideal", ideal, "the ideal J (alone: the ideal itself)");
  app.add_option("--modulo", modulo, "the ideal I (alone: S/I, with --ideal: J/I)");
  app.add_option("--q1", q1, "first component");
  app.add_option("--q2", q2, "second component");
  app.add_option("--q3", q3, "third component");
  app.add_flag("--json", as_json, "print the JSON record");
  app.add_option("--char", characteristic, "field characteristic, 0 or a prime");
  app.add_option("--seed", seed, "experiment seed");
  app.add_option("--max-exp", max_exp, "largest exponent in random instances")->check(CLI::PositiveNumber);
  app.add_option("--count", count, "number of random instances");
  app.add_option("--n-min", n_min, "smallest number of variables in random instances")->check(CLI::PositiveNumber);
  app.add_option("--family", family, "irreducible-pair | irreducible-triple | primary-pair")
      ->check(CLI::IsMember({"irreducible-pair", "irreducible-triple", "primary-pair"}));
  app.add_option("--threads", threads, "experiment workers (0: one per core)");
  app.add_option("--time-limit", time_limit, "seconds per computation (0: none; experiments default to 60)");
  app.add_option("--input", input, "decomposition file for validate ('-' for stdin)");
  app.add_option("--out", out_path, "experiment: JSON Lines output (default stdout)");
  app.add_option("--summary", summary_path, "experiment: CSV summary file (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (time_limit > 0.0) sdk_set_time_limit(time_limit);

  try {
    if (command == "experiment") {
      json config{{"seed", seed},     {"n_min", std::min(n_min, ring)}, {"n_max", ring},
                  {"max_exp", max_exp}, {"family", family},             {"count", count},
                  {"characteristic", characteristic}, {"threads", threads}};
      if (time_limit > 0.0) config["time_limit_seconds"] = time_limit;
      std::ofstream file;
      RecordSink sink{&std::cout};
      if (out_path) {
        file.open(*out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + *out_path);
        sink.out = &file;
      }
      LibString summary, csv;
      const sdk_status status = sdk_experiment(config.dump().c_str(), write_record, &sink, &summary.p, &csv.p);
      if (status != SDK_OK) return report_failure(status);
      if (summary_path) {
        std::ofstream s(*summary_path, std::ios::binary);
        if (!s) throw std::runtime_error("cannot write " + *summary_path);
        s << csv.str();
      } else {
        std::cerr << csv.str();
      }
      const json s = json::parse(summary.str());
      return s["errors"].get<std::size_t>() == 0 ? kExitOk : kExitError;
    }

    json ideals = json::object();
    if (ideal) ideals["J"] = *ideal;
    if (modulo) ideals["I"] = *modulo;
    if (q1) ideals["Q1"] = *q1;
    if (q2) ideals["Q2"] = *q2;
    if (q3) ideals["Q3"] = *q3;
    json problem{{"ring", ring}, {"task", command}, {"ideals", ideals}, {"characteristic", characteristic}};
    if (command == "validate") problem["decomposition"] = read_all(input);

    LibString out;
    const sdk_status status = sdk_run(problem.dump().c_str(), &out.p);
    if (status != SDK_OK) return report_failure(status);
    return print_record(command, json::parse(out.str()), as_json);
  } catch (const std::exception& e) {
    std::cerr << "sdepthkit: " << e.what() << '\n';
    return kExitError;
  }
}
