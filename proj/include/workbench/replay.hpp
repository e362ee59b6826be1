#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb::replay {

struct Claim {
  std::string id;
  std::string ref;  // location of the displayed line, e.g. "sec4.case1.step2"
  bool pass = false;
  std::string detail;
};

// Statements recorded but not machine-checked (e.g. families without presentations).
struct Note {
  std::string id;
  std::string text;
};

struct Report {
  std::string script;
  std::vector<Claim> claims;
  std::vector<Note> notes;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

// Known script ids in canonical order.
const std::vector<std::string>& script_ids();
// 4, 5 or 6.
int script_section(const std::string& id);
Report replay(const std::string& id);

class ReplayError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::replay
