#include "workbench/workbench.h"

#include "workbench/bogomolov.hpp"
#include "workbench/paperdata.hpp"
#include "workbench/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace wb;

struct wb_report {
  verify::Result result;
};

struct wb_groups {
  std::vector<paper::GroupRecord> records;
};

struct wb_b0_result {
  bog::B0Result r;
  bool oracle_ran = false;
  bog::Invariants oracle;
};

namespace {

thread_local std::string last_error;

wb_status fail(wb_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn, mapping exceptions to status codes.
template <class F>
wb_status guarded(F&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const paper::ParseError& e) {
    return fail(WB_ERR_PARSE, e.what());
  } catch (const replay::ReplayError& e) {
    return fail(WB_ERR_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(WB_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(WB_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* wb_version(void) { return "1.0.0"; }

const char* wb_last_error(void) { return last_error.c_str(); }

void wb_string_free(char* s) { std::free(s); }

wb_status wb_verify_paper(const char* section, unsigned jobs, wb_report** out) {
  if (!section || !out) return fail(WB_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (!verify::valid_section(section)) return fail(WB_ERR_ARGUMENT, std::string("unknown section: ") + section);
    auto* r = new wb_report{verify::verify_paper({section, jobs})};
    *out = r;
    return WB_OK;
  });
}

wb_status wb_replay(const char* script_id, wb_report** out) {
  if (!script_id || !out) return fail(WB_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    replay::Report rep = replay::replay(script_id);
    auto* r = new wb_report{};
    r->result.claims = std::move(rep.claims);
    r->result.notes = std::move(rep.notes);
    *out = r;
    return WB_OK;
  });
}

size_t wb_report_claim_count(const wb_report* r) { return r ? r->result.claims.size() : 0; }

size_t wb_report_failure_count(const wb_report* r) { return r ? r->result.failures() : 0; }

wb_status wb_report_claim(const wb_report* r, size_t i, const char** id, const char** ref, int* pass) {
  if (!r) return fail(WB_ERR_ARGUMENT, "null report");
  if (i >= r->result.claims.size()) return fail(WB_ERR_ARGUMENT, "claim index out of range");
  const auto& c = r->result.claims[i];
  if (id) *id = c.id.c_str();
  if (ref) *ref = c.ref.c_str();
  if (pass) *pass = c.pass ? 1 : 0;
  return WB_OK;
}

wb_status wb_report_format(const wb_report* r, wb_format fmt, char** out) {
  if (!r || !out) return fail(WB_ERR_ARGUMENT, "null argument");
  if (fmt != WB_FORMAT_TEXT && fmt != WB_FORMAT_RECORDS) return fail(WB_ERR_ARGUMENT, "unknown format");
  return guarded([&] {
    *out = dup(fmt == WB_FORMAT_TEXT ? verify::format_text(r->result) : verify::format_records(r->result));
    return WB_OK;
  });
}

void wb_report_free(wb_report* r) { delete r; }

wb_status wb_groups_builtin(wb_groups** out) {
  if (!out) return fail(WB_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new wb_groups{paper::paper_groups()};
    return WB_OK;
  });
}

wb_status wb_groups_load(const char* path, wb_groups** out) {
  if (!path || !out) return fail(WB_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<paper::GroupRecord> recs;
    try {
      recs = paper::ingest(path);
    } catch (const paper::ParseError&) {
      throw;
    } catch (const std::runtime_error& e) {
      return fail(WB_ERR_NOT_FOUND, e.what());
    }
    *out = new wb_groups{std::move(recs)};
    return WB_OK;
  });
}

size_t wb_groups_count(const wb_groups* g) { return g ? g->records.size() : 0; }

wb_status wb_groups_find(const wb_groups* g, int order, int id, size_t* index) {
  if (!g || !index) return fail(WB_ERR_ARGUMENT, "null argument");
  for (std::size_t i = 0; i < g->records.size(); ++i)
    if (g->records[i].order == order && g->records[i].id == id) {
      *index = i;
      return WB_OK;
    }
  return fail(WB_ERR_NOT_FOUND, "group " + std::to_string(order) + ":" + std::to_string(id) + " not available");
}

void wb_groups_free(wb_groups* g) { delete g; }

wb_status wb_b0(const wb_groups* g, size_t index, int m0, int oracle, wb_b0_result** out) {
  if (!g || !out) return fail(WB_ERR_ARGUMENT, "null argument");
  if (index >= g->records.size()) return fail(WB_ERR_ARGUMENT, "group index out of range");
  if (m0 < 1) return fail(WB_ERR_ARGUMENT, "tail exponent must be at least 1");
  return guarded([&] {
    const auto& rec = g->records[index];
    auto* res = new wb_b0_result{};
    try {
      res->r = bog::b0(rec.pres, m0);
      if (oracle) {
        pc::PcGroup pg(rec.pres);
        auto h = bog::h2_oracle(bog::finite_group(pg), res->r.m, pg.order());
        res->oracle = h.multiplier;
        res->oracle_ran = true;
      }
    } catch (...) {
      delete res;
      throw;
    }
    *out = res;
    return WB_OK;
  });
}

int wb_b0_trivial(const wb_b0_result* r) { return r && r->r.b0.empty() ? 1 : 0; }

int wb_b0_m(const wb_b0_result* r) { return r ? r->r.m : 0; }

int wb_b0_anomaly(const wb_b0_result* r) { return r && r->r.anomaly ? 1 : 0; }

int wb_b0_oracle_agrees(const wb_b0_result* r) {
  if (!r || !r->oracle_ran) return -1;
  return r->oracle == r->r.multiplier ? 1 : 0;
}

wb_status wb_b0_invariants(const wb_b0_result* r, wb_invariant which, char** out) {
  if (!r || !out) return fail(WB_ERR_ARGUMENT, "null argument");
  const bog::Invariants* inv = nullptr;
  switch (which) {
    case WB_INV_MULTIPLIER: inv = &r->r.multiplier; break;
    case WB_INV_M0: inv = &r->r.m0; break;
    case WB_INV_B0: inv = &r->r.b0; break;
    case WB_INV_ORACLE:
      if (!r->oracle_ran) return fail(WB_ERR_ARGUMENT, "oracle did not run");
      inv = &r->oracle;
      break;
    default: return fail(WB_ERR_ARGUMENT, "unknown invariant");
  }
  *out = dup(bog::invariants_str(*inv));
  return WB_OK;
}

void wb_b0_free(wb_b0_result* r) { delete r; }

wb_status wb_isoclinic(const wb_groups* ga, size_t ia, const wb_groups* gb, size_t ib, int* isoclinic,
                       char** reason) {
  if (!ga || !gb || !isoclinic) return fail(WB_ERR_ARGUMENT, "null argument");
  if (ia >= ga->records.size() || ib >= gb->records.size()) return fail(WB_ERR_ARGUMENT, "group index out of range");
  return guarded([&] {
    pc::PcGroup a(ga->records[ia].pres), b(gb->records[ib].pres);
    auto res = pc::is_isoclinic(a, b);
    *isoclinic = res.isoclinic ? 1 : 0;
    if (reason) *reason = dup(res.reason);
    return WB_OK;
  });
}

}  // extern "C"
