#pragma once

#include "workbench/replay.hpp"

#include <string>
#include <vector>

namespace wb::verify {

struct Options {
  std::string section = "all";  // "4", "5", "6" or "all"
  unsigned jobs = 1;
};

struct Result {
  std::vector<replay::Claim> claims;
  std::vector<replay::Note> notes;
  std::size_t failures() const;
};

bool valid_section(const std::string& s);

// Group tables, representations, isoclinism partition and B0 (section "all" only), then the
// replay scripts of the selected section. Claims come out in canonical order for any job count.
Result verify_paper(const Options& opt);

// "claim <id> <ref> PASS|FAIL" lines and "claims: N, failures: F".
std::string format_text(const Result& r);
// "claim id=<id> ref=<ref> status=PASS|FAIL" lines and "summary claims=N failures=F".
std::string format_records(const Result& r);

}  // namespace wb::verify
