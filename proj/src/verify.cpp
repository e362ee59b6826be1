#include "workbench/verify.hpp"

#include "workbench/bogomolov.hpp"
#include "workbench/paperdata.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace wb::verify {

std::size_t Result::failures() const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [](const replay::Claim& c) { return !c.pass; }));
}

bool valid_section(const std::string& s) { return s == "4" || s == "5" || s == "6" || s == "all"; }

namespace {

using Task = std::function<replay::Report()>;

std::string gid(int id) { return "G" + std::to_string(id); }

std::string longs(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

replay::Report structure_task(const paper::GroupRecord& r) {
  replay::Report rep;
  const std::string p = "S3." + gid(r.id) + ".", ref = "sec3.table";
  auto add = [&](const std::string& name, bool ok, std::string detail) {
    rep.claims.push_back({p + name, ref, ok, ok ? "" : std::move(detail)});
  };
  auto cons = pc::verify_consistency(r.pres, 2000);
  add("consistent", cons.ok(), cons.ok() ? "" : cons.failures.front());
  pc::PcGroup g(r.pres);
  pc::Structure st = pc::structure(g);
  add("order", st.order == 243, "order " + std::to_string(st.order));
  add("center", st.center_invariants == r.expected_center, "center " + longs(st.center_invariants));
  add("class", st.nilpotency_class == r.expected_class, "class " + std::to_string(st.nilpotency_class));
  add("family", r.family == paper::family_of(r.id) && r.family != 0, "family " + std::to_string(r.family));
  cyc::RepReport rr = cyc::rep_check(r.pres, r.rep);
  add("rep.relations", rr.ok(), "a relation fails on the matrices");
  add("rep.faithful", rr.closure_order == 243, "matrix group order " + std::to_string(rr.closure_order));
  return rep;
}

replay::Report isoclinism_task(const std::vector<pc::PcGroup>& gs) {
  replay::Report rep;
  const auto& recs = paper::paper_groups();
  for (std::size_t i = 0; i < recs.size(); ++i)
    for (std::size_t j = i + 1; j < recs.size(); ++j) {
      auto res = pc::is_isoclinic(gs[i], gs[j]);
      bool same = recs[i].family == recs[j].family;
      rep.claims.push_back({"S3.isoclinism." + gid(recs[i].id) + "." + gid(recs[j].id), "sec3.table",
                            res.isoclinic == same, res.isoclinic == same ? "" : res.reason});
    }
  return rep;
}

struct B0Slot {
  int family = 0;
  bog::Invariants b0;
};

replay::Report b0_task(const paper::GroupRecord& r, B0Slot& slot) {
  replay::Report rep;
  auto res = bog::b0(r.pres);
  slot = {r.family, res.b0};
  bool want = r.family == 10;
  bool ok = !res.anomaly && (!res.b0.empty()) == want;
  rep.claims.push_back({"B0." + gid(r.id), "thm1.7", ok, "B0 = " + bog::invariants_str(res.b0)});
  return rep;
}

}  // namespace

Result verify_paper(const Options& opt) {
  if (!valid_section(opt.section)) throw std::invalid_argument("unknown section: " + opt.section);
  const bool all = opt.section == "all";
  const auto& recs = paper::paper_groups();

  std::vector<Task> tasks;
  std::vector<B0Slot> slots(recs.size());
  std::vector<pc::PcGroup> groups;
  if (all) {
    for (const auto& r : recs) tasks.push_back([&r] { return structure_task(r); });
    for (const auto& r : recs) groups.emplace_back(r.pres);
    tasks.push_back([&groups] { return isoclinism_task(groups); });
    for (std::size_t i = 0; i < recs.size(); ++i)
      tasks.push_back([&recs, &slots, i] { return b0_task(recs[i], slots[i]); });
  }
  const std::size_t replay_first = tasks.size();
  for (const auto& id : replay::script_ids())
    if (all || std::to_string(replay::script_section(id)) == opt.section)
      tasks.push_back([id] { return replay::replay(id); });

  std::vector<replay::Report> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) out[k] = tasks[k]();
  };
  unsigned width = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  width = std::min<unsigned>(width, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Result res;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (all && k == replay_first) {
      // B0 must be constant on each family.
      std::map<int, std::vector<const B0Slot*>> fam;
      for (const auto& s : slots) fam[s.family].push_back(&s);
      for (const auto& [f, members] : fam) {
        bool same = std::all_of(members.begin(), members.end(), [&](const B0Slot* s) { return s->b0 == members[0]->b0; });
        res.claims.push_back({"B0.phi" + std::to_string(f) + ".constant", "thm1.7", same, same ? "" : "B0 differs in the family"});
      }
    }
    for (auto& c : out[k].claims) res.claims.push_back(std::move(c));
    for (auto& n : out[k].notes) res.notes.push_back(std::move(n));
  }
  return res;
}

std::string format_text(const Result& r) {
  std::ostringstream os;
  for (const auto& c : r.claims) {
    os << "claim " << c.id << " " << c.ref << " " << (c.pass ? "PASS" : "FAIL") << "\n";
    if (!c.pass && !c.detail.empty()) os << "  " << c.detail << "\n";
  }
  for (const auto& n : r.notes) os << "note " << n.id << " " << n.text << "\n";
  os << "claims: " << r.claims.size() << ", failures: " << r.failures() << "\n";
  return os.str();
}

std::string format_records(const Result& r) {
  std::ostringstream os;
  for (const auto& c : r.claims)
    os << "claim id=" << c.id << " ref=" << c.ref << " status=" << (c.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& n : r.notes) os << "note id=" << n.id << " status=UNVERIFIED\n";
  os << "summary claims=" << r.claims.size() << " failures=" << r.failures() << "\n";
  return os.str();
}

}  // namespace wb::verify
