#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wb::pc {

constexpr int kPrime = 3;

using Exps = std::vector<int>;

// Power-commutator presentation with all relative orders 3. Generators are 0-based
// internally; text forms use g1..gn.
class PcPresentation {
public:
  PcPresentation() = default;
  PcPresentation(int n, std::string label = "");

  int n() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const Exps& power(int i) const { return power_.at(i); }
  const Exps& comm(int j, int i) const;
  void set_power(int i, Exps w);
  void set_comm(int j, int i, Exps w);

  // Word with the given 1-based (generator, exponent) factors, as a normal-form exponent vector.
  // Only valid when factors are listed in increasing generator order.
  Exps word(std::initializer_list<std::pair<int, int>> factors) const;

  bool operator==(const PcPresentation& o) const = default;

private:
  void check_rhs(int i, const Exps& w) const;
  int n_ = 0;
  std::string label_;
  std::vector<Exps> power_;
  std::vector<Exps> comm_;  // index j*(j-1)/2 + i for j > i
};

inline int comm_index(int j, int i) { return j * (j - 1) / 2 + i; }

// Collection from the left. With tails enabled, every application of a defining relation
// records the relation's central tail generator (power i -> i, commutator (j,i) -> n + comm_index).
class Collector {
public:
  struct Elem {
    Exps e;
    std::vector<std::uint64_t> t;
    bool operator==(const Elem& o) const = default;
  };

  explicit Collector(const PcPresentation& p, std::uint64_t tail_modulus = 0);

  const PcPresentation& presentation() const { return *p_; }
  int n() const { return p_->n(); }
  bool has_tails() const { return tail_mod_ != 0; }
  std::size_t tail_count() const { return tails_; }
  std::uint64_t tail_modulus() const { return tail_mod_; }

  Elem identity() const;
  Elem gen(int i) const;
  Elem from_exps(const Exps& e) const;
  // g_i^3 as given by the presentation, carrying its tail.
  Elem power_elem(int i) const;
  // g_j g_i collected.
  Elem collect_pair(int j, int i) const;

  void mul_gen(Elem& x, int k) const;
  void mul(Elem& x, const Elem& y) const;
  Elem product(const Elem& x, const Elem& y) const {
    Elem r = x;
    mul(r, y);
    return r;
  }
  Elem inv(const Elem& x) const;
  Elem pow(const Elem& x, long k) const;
  Elem comm(const Elem& x, const Elem& y) const;
  // Letters (generator, +1 or -1), 0-based generators.
  Elem collect(const std::vector<std::pair<int, int>>& letters) const;

  bool base_is_identity(const Elem& x) const;

private:
  void add_tail(Elem& x, std::size_t idx) const;
  void mul_word(Elem& x, const Exps& w, std::size_t tail_idx, bool with_tail) const;

  const PcPresentation* p_;
  std::uint64_t tail_mod_ = 0;
  std::size_t tails_ = 0;
};

// Echelonized generating sequence of a subgroup, indexed by leading depth. Works in the
// base group and, with tails enabled, in a central extension: residues with trivial base
// part are collected as tail vectors.
class SubgroupEchelon {
public:
  explicit SubgroupEchelon(const Collector& c);

  // Adds elements and closes under powers, mutual commutators and commutators with `normalizers`.
  void close(const std::vector<Collector::Elem>& gens, const std::vector<Collector::Elem>& normalizers);

  std::size_t base_size() const;  // number of echelon entries
  const std::vector<std::optional<Collector::Elem>>& entries() const { return by_depth_; }
  std::vector<Collector::Elem> generators() const;
  const std::vector<std::vector<std::uint64_t>>& tail_residues() const { return tails_; }
  // Residue after sifting (identity base part for members).
  Collector::Elem sift(Collector::Elem x) const;
  bool contains(const Collector::Elem& x) const;

private:
  int depth(const Collector::Elem& x) const;
  const Collector* c_;
  std::vector<std::optional<Collector::Elem>> by_depth_;
  std::vector<std::vector<std::uint64_t>> tails_;
};

// Fully enumerated group with multiplication table; element index = exponent vector read
// as a base-3 number with g1 most significant.
class PcGroup {
public:
  explicit PcGroup(const PcPresentation& p);

  const PcPresentation& presentation() const { return p_; }
  int n() const { return p_.n(); }
  std::size_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t comm(std::uint32_t a, std::uint32_t b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  std::uint32_t pow(std::uint32_t a, long k) const;
  std::uint32_t gen(int i) const;
  std::uint32_t identity() const { return 0; }
  std::uint32_t index(const Exps& e) const;
  Exps exps(std::uint32_t idx) const;
  int element_order(std::uint32_t a) const;

private:
  PcPresentation p_;
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
};

// The standard overlap words: both sides collected. Equality of all pairs is the
// consistency criterion; in a tailed collector the tail differences are the consistency
// relations of the extension.
struct Overlap {
  std::string name;
  Collector::Elem lhs, rhs;
};
std::vector<Overlap> overlaps(const Collector& c);

struct ConsistencyReport {
  std::vector<std::string> failures;
  std::size_t overlaps_checked = 0;
  std::size_t random_triples = 0;
  bool ok() const { return failures.empty(); }
};

// Overlap conditions plus `random_triples` associativity checks on the enumerated table.
ConsistencyReport verify_consistency(const PcPresentation& p, std::size_t random_triples = 100000,
                                     std::uint64_t seed = 1);

struct Structure {
  std::size_t order = 0;
  std::vector<std::uint32_t> center;
  std::vector<long> center_invariants;
  std::size_t derived_order = 0;
  std::vector<std::size_t> lower_central_orders;  // |gamma_1|, |gamma_2|, ..., 1
  int nilpotency_class = 0;
  int exponent = 0;
  std::vector<long> abelianization;
};

Structure structure(const PcGroup& g);

// Invariants (ascending) of an abelian subgroup given as an element list.
std::vector<long> abelian_invariants_of(const PcGroup& g, const std::vector<std::uint32_t>& elems);

std::vector<std::pair<std::uint32_t, std::uint32_t>> commuting_pairs(const PcGroup& g);

struct IsoclinismWitness {
  // theta on generators of G1/Z1, as representative exponent vectors in G1 and G2.
  std::vector<std::pair<Exps, Exps>> theta;
  // phi on generators of [G1,G1].
  std::vector<std::pair<Exps, Exps>> phi;
};

struct IsoclinismResult {
  bool isoclinic = false;
  std::string reason;
  std::size_t candidates_tried = 0;
  std::optional<IsoclinismWitness> witness;
};

IsoclinismResult is_isoclinic(const PcGroup& g1, const PcGroup& g2);

std::string exps_str(const Exps& e);

class PcError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::pc
