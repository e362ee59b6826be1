#include "workbench/paperdata.hpp"

#include <algorithm>
#include <map>

namespace wb::paper {

using cyc::CycMatrix;
using cyc::CycNum;
using pc::PcPresentation;

namespace {

struct Rel {
  int a, b;  // comm a b (a > b) or pow a (b = 0)
  std::initializer_list<std::pair<int, int>> rhs;
};

PcPresentation make(int id, std::initializer_list<Rel> rels) {
  PcPresentation p(5, "243:" + std::to_string(id));
  for (const auto& r : rels) {
    if (r.b == 0) p.set_power(r.a - 1, p.word(r.rhs));
    else p.set_comm(r.a - 1, r.b - 1, p.word(r.rhs));
  }
  return p;
}

CycMatrix I3() { return CycMatrix::identity(3); }
CycNum z(int k) { return CycNum::zeta(k); }
CycNum e(int k) { return CycNum::eta(k); }

CycMatrix diag2(const CycMatrix& a, const CycMatrix& b) { return CycMatrix::block_diag({a, b}); }
CycMatrix diag3(const CycMatrix& a, const CycMatrix& b, const CycMatrix& c) { return CycMatrix::block_diag({a, b, c}); }

// [[0,0,I],[s I,0,0],[0,I,0]]
CycMatrix block_cycle(const CycNum& s) {
  return CycMatrix::blocks({{std::nullopt, std::nullopt, I3()},
                            {I3() * s, std::nullopt, std::nullopt},
                            {std::nullopt, I3(), std::nullopt}});
}

GroupRecord phi6(int id) {
  // f1^3, f2^3 per group
  std::map<int, std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>> extra = {
      {3, {{}, {}}},
      {4, {{{4, 1}}, {}}},
      {5, {{{4, 1}}, {{4, 1}}}},
      {6, {{}, {{4, 2}}}},
      {7, {{{4, 1}}, {{4, 2}}}},
      {8, {{{5, 1}}, {{4, 1}}}},
      {9, {{{5, 2}}, {{4, 1}}}},
  };
  PcPresentation p = make(id, {{2, 1, {{3, 1}}}, {3, 1, {{4, 1}}}, {3, 2, {{5, 1}}}});
  auto w = [&](const std::vector<std::pair<int, int>>& f) {
    pc::Exps x(5, 0);
    for (auto [g, k] : f) x[g - 1] = k;
    return x;
  };
  p.set_power(0, w(extra[id].first));
  p.set_power(1, w(extra[id].second));

  // f1 -> diag(A, B), f2 -> diag(C, c3)
  CycMatrix a = (id == 4 || id == 5 || id == 7) ? cyc::c3(1) : cyc::c3(0);
  CycMatrix b = cyc::e3(2);
  if (id == 8) b = b * e(1);
  if (id == 9) b = b * e(2);
  CycNum cs = 1;
  if (id == 5 || id == 8 || id == 9) cs = e(1);
  if (id == 6 || id == 7) cs = e(2);
  GroupRecord r;
  r.id = id;
  r.family = 6;
  r.pres = p;
  r.rep = {diag2(a, b), diag2(cyc::e3(1) * cs, cyc::c3(0)), diag2(cyc::d3(), cyc::d3()),
           diag2(I3() * z(1), I3()), diag2(I3(), I3() * z(1))};
  r.expected_center = {3, 3};
  r.expected_class = 3;
  return r;
}

GroupRecord phi5(int id) {
  PcPresentation p = make(id, {{2, 1, {{5, 1}}}, {4, 1, {{5, 1}}}, {3, 2, {{5, 1}}}});
  if (id == 66) p.set_power(0, p.word({{5, 1}}));
  GroupRecord r;
  r.id = id;
  r.family = 5;
  r.pres = p;
  CycMatrix c = cyc::c3(0);
  r.rep = {block_cycle(id == 66 ? z(1) : CycNum(1)), diag3(c, c * z(1), c * z(2)),
           diag3(cyc::d3(), cyc::d3(), cyc::d3()), diag3(I3(), I3() * z(1), I3() * z(2)),
           CycMatrix::scalar(9, z(1))};
  r.expected_center = {3};
  r.expected_class = 2;
  return r;
}

GroupRecord phi7(int id) {
  PcPresentation p = make(id, {{2, 1, {{4, 1}}}, {3, 2, {{5, 1}}}, {4, 1, {{5, 1}}}});
  switch (id) {
    case 57: p.set_power(1, p.word({{5, 1}})); break;
    case 58: p.set_power(1, p.word({{5, 2}})); break;
    case 59:
      p.set_power(0, p.word({{5, 1}}));
      p.set_power(1, p.word({{5, 2}}));
      break;
    case 60: p.set_power(2, p.word({{5, 1}})); break;
    default: break;
  }
  GroupRecord r;
  r.id = id;
  r.family = 7;
  r.pres = p;
  int ci = id == 57 ? 1 : (id == 58 || id == 59) ? 2 : 0;
  CycMatrix x = cyc::c3(ci);
  CycMatrix d = id == 60 ? cyc::d3() * e(1) : cyc::d3();
  r.rep = {block_cycle(id == 59 ? z(1) : CycNum(1)), diag3(x, x, x * z(1)), diag3(d, d, d),
           diag3(I3(), I3() * z(1), I3() * z(2)), CycMatrix::scalar(9, z(1))};
  r.expected_center = {3};
  r.expected_class = 3;
  return r;
}

GroupRecord phi10(int id) {
  PcPresentation p = make(id, {{2, 1, {{3, 1}}}, {3, 1, {{4, 1}}}, {3, 2, {{5, 1}}}, {4, 1, {{5, 1}}},
                               {2, 0, {{4, 2}}}, {3, 0, {{5, 2}}}});
  if (id == 29) p.set_power(0, p.word({{5, 1}}));
  if (id == 30) p.set_power(0, p.word({{5, 2}}));
  GroupRecord r;
  r.id = id;
  r.family = 10;
  r.pres = p;
  CycMatrix x = cyc::c3(id - 28);
  CycMatrix f2 = CycMatrix::blocks({{std::nullopt, cyc::d9(5), std::nullopt},
                                    {std::nullopt, std::nullopt, cyc::d9(2)},
                                    {cyc::d9(8), std::nullopt, std::nullopt}});
  // the block factor e^(1) is read as e_3^(1)
  CycMatrix f3 = diag3(cyc::e3(1) * e(8), cyc::e3(1) * e(5), cyc::e3(1) * e(2));
  r.rep = {diag3(x, x, x), f2, f3, diag3(cyc::d3(), cyc::d3(), cyc::d3()), CycMatrix::scalar(9, z(1))};
  r.expected_center = {3};
  r.expected_class = 4;
  return r;
}

const std::map<int, std::vector<int>>& family_table() {
  static const std::map<int, std::vector<int>> t = {
      {1, {1, 10, 23, 31, 48, 61, 67}},
      {2, {2, 11, 12, 21, 24, 32, 33, 34, 35, 36, 49, 50, 62, 63, 64}},
      {3, {13, 14, 15, 16, 17, 18, 19, 20, 51, 52, 53, 54, 55}},
      {4, {37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47}},
      {5, {65, 66}},
      {6, {3, 4, 5, 6, 7, 8, 9}},
      {7, {56, 57, 58, 59, 60}},
      {8, {22}},
      {9, {25, 26, 27}},
      {10, {28, 29, 30}},
  };
  return t;
}

}  // namespace

const std::vector<GroupRecord>& paper_groups() {
  static const std::vector<GroupRecord> groups = [] {
    std::vector<GroupRecord> g;
    for (int i = 3; i <= 9; ++i) g.push_back(phi6(i));
    for (int i : {65, 66}) g.push_back(phi5(i));
    for (int i = 56; i <= 60; ++i) g.push_back(phi7(i));
    for (int i = 28; i <= 30; ++i) g.push_back(phi10(i));
    return g;
  }();
  return groups;
}

std::optional<GroupRecord> record(int order, int id) {
  if (order != 243) return std::nullopt;
  for (const auto& r : paper_groups())
    if (r.id == id) return r;
  return std::nullopt;
}

int family_of(int id) {
  for (const auto& [f, ids] : family_table())
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) return f;
  return 0;
}

std::vector<int> family_members(int family) {
  auto it = family_table().find(family);
  return it == family_table().end() ? std::vector<int>{} : it->second;
}

int family_class(int family) {
  static const std::map<int, int> c = {{1, 1}, {2, 2}, {3, 3}, {4, 2}, {5, 2},
                                       {6, 3}, {7, 3}, {8, 3}, {9, 4}, {10, 4}};
  auto it = c.find(family);
  return it == c.end() ? 0 : it->second;
}

bool family_presented(int family) { return family == 5 || family == 6 || family == 7 || family == 10; }

}  // namespace wb::paper
