#include "workbench/cyclotomic.hpp"
#include "workbench/pcgroup.hpp"

namespace wb::cyc {

namespace {

CycMatrix eval_word(const std::vector<CycMatrix>& images, const pc::Exps& w) {
  CycMatrix r = CycMatrix::identity(images[0].dim());
  for (std::size_t k = 0; k < w.size(); ++k)
    for (int e = 0; e < w[k]; ++e) r = r * images[k];
  return r;
}

}  // namespace

RepReport rep_check(const pc::PcPresentation& p, const std::vector<CycMatrix>& images, std::size_t cap) {
  if (static_cast<int>(images.size()) != p.n()) throw CycError("rep_check: one image per generator required");
  RepReport rep;
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    bool ok = images[i].pow(pc::kPrime) == eval_word(images, p.power(i));
    rep.relations.push_back({"pow " + std::to_string(i + 1), ok});
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      // [g_j, g_i] = w  <=>  g_j g_i = g_i g_j w
      bool ok = images[j] * images[i] == images[i] * images[j] * eval_word(images, p.comm(j, i));
      rep.relations.push_back({"comm " + std::to_string(j + 1) + " " + std::to_string(i + 1), ok});
    }
  MatrixGroup g = closure(images, cap);
  rep.overflow = g.overflow;
  rep.closure_order = g.order();
  std::size_t expected = 1;
  for (int i = 0; i < n; ++i) expected *= pc::kPrime;
  if (rep.closure_order != expected) rep.relations.push_back({"closure order " + std::to_string(expected), false});
  return rep;
}

}  // namespace wb::cyc
