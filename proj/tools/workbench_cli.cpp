#include "workbench/workbench.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Str {
  char* p = nullptr;
  ~Str() { wb_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

using Groups = std::unique_ptr<wb_groups, decltype(&wb_groups_free)>;

int error(const std::string& what) {
  std::cerr << "workbench: " << what << ": " << wb_last_error() << "\n";
  return kUsage;
}

std::optional<std::pair<int, int>> parse_group(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    std::size_t a = 0, b = 0;
    int order = std::stoi(s.substr(0, colon), &a);
    int id = std::stoi(s.substr(colon + 1), &b);
    if (a != colon || b != s.size() - colon - 1) return std::nullopt;
    return std::make_pair(order, id);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Loads the group set (built-in or from file) and resolves one selector into an index.
int resolve(const std::string& file, const std::string& sel, Groups& out, std::size_t& index) {
  auto g = parse_group(sel);
  if (!g) {
    std::cerr << "workbench: group must be given as <order>:<id>, got '" << sel << "'\n";
    return kUsage;
  }
  wb_groups* raw = nullptr;
  wb_status st = file.empty() ? wb_groups_builtin(&raw) : wb_groups_load(file.c_str(), &raw);
  if (st != WB_OK) return error(file.empty() ? "built-in groups" : file);
  out.reset(raw);
  if (wb_groups_find(out.get(), g->first, g->second, &index) != WB_OK) {
    std::cerr << "workbench: " << wb_last_error() << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_verify(const std::string& section, const std::string& format, unsigned jobs) {
  wb_report* raw = nullptr;
  if (wb_verify_paper(section.c_str(), jobs, &raw) != WB_OK) return error("verify-paper");
  std::unique_ptr<wb_report, decltype(&wb_report_free)> rep(raw, wb_report_free);
  Str text;
  if (wb_report_format(rep.get(), format == "records" ? WB_FORMAT_RECORDS : WB_FORMAT_TEXT, &text.p) != WB_OK)
    return error("format");
  std::fputs(text.get().c_str(), stdout);
  return wb_report_failure_count(rep.get()) == 0 ? kOk : kFailed;
}

int cmd_b0(const std::string& file, const std::string& sel, int m, bool oracle, const std::string& format) {
  Groups groups(nullptr, wb_groups_free);
  std::size_t idx = 0;
  if (int rc = resolve(file, sel, groups, idx)) return rc;
  wb_b0_result* raw = nullptr;
  if (wb_b0(groups.get(), idx, m, oracle ? 1 : 0, &raw) != WB_OK) return error("b0");
  std::unique_ptr<wb_b0_result, decltype(&wb_b0_free)> r(raw, wb_b0_free);
  Str mult, b0, orc;
  wb_b0_invariants(r.get(), WB_INV_MULTIPLIER, &mult.p);
  wb_b0_invariants(r.get(), WB_INV_B0, &b0.p);
  const char* verdict = wb_b0_trivial(r.get()) ? "trivial" : "nontrivial";
  int agrees = wb_b0_oracle_agrees(r.get());
  if (agrees >= 0) wb_b0_invariants(r.get(), WB_INV_ORACLE, &orc.p);
  if (format == "records") {
    std::cout << "b0 group=" << sel << " m=" << wb_b0_m(r.get()) << " multiplier=" << mult.get() << " b0=" << b0.get()
              << " status=" << verdict << (wb_b0_anomaly(r.get()) ? " anomaly=1" : "");
    if (agrees >= 0) std::cout << " oracle=" << orc.get() << " oracle_agrees=" << agrees;
    std::cout << "\n";
  } else {
    std::cout << "group " << sel << "\n"
              << "m = " << wb_b0_m(r.get()) << (wb_b0_anomaly(r.get()) ? " (not stable by m = 5)" : "") << "\n"
              << "multiplier = " << mult.get() << "\n"
              << "B0 = " << verdict << " " << b0.get() << "\n";
    if (agrees >= 0) std::cout << "oracle multiplier = " << orc.get() << (agrees ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  return agrees == 0 ? kFailed : kOk;
}

int cmd_family(const std::string& file, const std::string& a, const std::string& b, const std::string& format) {
  Groups ga(nullptr, wb_groups_free), gb(nullptr, wb_groups_free);
  std::size_t ia = 0, ib = 0;
  if (int rc = resolve(file, a, ga, ia)) return rc;
  if (int rc = resolve(file, b, gb, ib)) return rc;
  int iso = 0;
  Str reason;
  if (wb_isoclinic(ga.get(), ia, gb.get(), ib, &iso, &reason.p) != WB_OK) return error("family");
  if (format == "records")
    std::cout << "family a=" << a << " b=" << b << " status=" << (iso ? "isoclinic" : "not-isoclinic") << "\n";
  else
    std::cout << a << " and " << b << ": " << (iso ? "isoclinic" : "not isoclinic") << " (" << reason.get() << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations for groups of order 243: presentations, B0, isoclinism and proof replays"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 verification failure, 2 usage or parse error.\n"
             "WORKBENCH_SEED fixes the seed of the randomized test suites.");

  std::string format = "text";
  auto fmt_opt = [&](CLI::App* c) {
    c->add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "records"}))->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify-paper", "Run every table check, B0 computation and proof replay");
  std::string section = "all";
  unsigned jobs = 0;
  verify->add_option("--section", section, "4, 5, 6 or all")->capture_default_str();
  verify->add_option("--jobs", jobs, "Parallel jobs (0 = all cores)")->capture_default_str();
  fmt_opt(verify);

  auto* b0 = app.add_subcommand("b0", "Bogomolov multiplier of one group");
  std::string group, file;
  int m = 2;
  bool oracle = false;
  b0->add_option("--group", group, "Group as <order>:<id>")->required();
  b0->add_option("--file", file, "Read presentations from this file instead of the built-in set");
  b0->add_option("--m", m, "Starting tail exponent")->capture_default_str()->check(CLI::PositiveNumber);
  b0->add_flag("--oracle", oracle, "Cross-check the multiplier with the bar-resolution oracle (slow)");
  fmt_opt(b0);

  auto* family = app.add_subcommand("family", "Decide whether two groups are isoclinic");
  std::string ga, gb;
  family->add_option("--a", ga, "First group as <order>:<id>")->required();
  family->add_option("--b", gb, "Second group as <order>:<id>")->required();
  family->add_option("--file", file, "Read presentations from this file instead of the built-in set");
  fmt_opt(family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (verify->parsed()) {
    if (section != "4" && section != "5" && section != "6" && section != "all") {
      std::cerr << "workbench: --section must be 4, 5, 6 or all\n";
      return kUsage;
    }
    return cmd_verify(section, format, jobs);
  }
  if (b0->parsed()) return cmd_b0(file, group, m, oracle, format);
  return cmd_family(file, ga, gb, format);
}
