#pragma once

#include "workbench/cyclotomic.hpp"
#include "workbench/pcgroup.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb::paper {

struct GroupRecord {
  int order = 243;
  int id = 0;
  int family = 0;  // isoclinism family number, 0 when unknown
  pc::PcPresentation pres;
  std::vector<cyc::CycMatrix> rep;  // empty for ingested records
  std::vector<long> expected_center;  // center invariants
  int expected_class = 0;

  std::string name() const { return std::to_string(order) + ":" + std::to_string(id); }
};

// The 17 presented groups: ids 3..9, 65, 66, 56..60, 28..30.
const std::vector<GroupRecord>& paper_groups();
std::optional<GroupRecord> record(int order, int id);

// Family table for the 67 groups of order 243.
int family_of(int id);
std::vector<int> family_members(int family);
int family_class(int family);
bool family_presented(int family);

// Line-based presentation text format.
std::string serialize(const GroupRecord& r);
std::string serialize(const std::vector<GroupRecord>& rs);

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

// Parses presentations; each must be consistent or a ParseError naming the failing
// condition is thrown. Records with order 243 and a known id get their family label.
std::vector<GroupRecord> parse_presentations(const std::string& text);
std::vector<GroupRecord> ingest(const std::string& path);

}  // namespace wb::paper
