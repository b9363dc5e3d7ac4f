#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "adnil/root_set.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

/// Sorted set of pairwise incomparable positive-root indices.
class Antichain {
 public:
  Antichain() = default;
  /// Sorts the indices and throws std::invalid_argument naming the first
  /// comparable pair.
  Antichain(const RootSystem& rs, std::vector<int> roots);

  const std::vector<int>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  bool empty() const { return roots_.empty(); }
  bool contains(int root) const;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend auto operator<=>(const Antichain&, const Antichain&) = default;

 private:
  std::vector<int> roots_;
};

/// mu <= nu in the root order, i.e. nu - mu has nonnegative coordinates.
bool root_leq(const RootSystem& rs, int mu, int nu);

/// An up-closed set of positive roots. Holds a non-owning pointer to its
/// root system, which must outlive it (the shared `root_system` instances
/// always do).
class Ideal {
 public:
  /// Throws std::invalid_argument if `members` is not closed under adding
  /// positive roots.
  Ideal(const RootSystem& rs, RootSet members);

  const RootSystem& system() const { return *rs_; }
  const RootSet& members() const { return members_; }
  int size() const { return members_.count(); }
  bool contains(int root) const { return members_.test(root); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.rs_ == b.rs_ && a.members_ == b.members_; }

 private:
  struct Unchecked {};
  Ideal(const RootSystem& rs, RootSet members, Unchecked) : rs_(&rs), members_(members) {}
  friend Ideal make_ideal_unchecked(const RootSystem&, RootSet);

  const RootSystem* rs_;
  RootSet members_;
};

/// For callers that have already established closure (enumeration).
Ideal make_ideal_unchecked(const RootSystem& rs, RootSet members);

/// The roots at or above `root` (including it).
RootSet roots_above(const RootSystem& rs, int root);
/// The roots at or below `root` (including it).
RootSet roots_below(const RootSystem& rs, int root);

Ideal up_closure(const RootSystem& rs, std::span<const int> roots);
inline Ideal up_closure(const RootSystem& rs, const Antichain& a) { return up_closure(rs, a.roots()); }
Antichain generators(const Ideal& ideal);

/// All ideals, each exactly once, ordered by their membership words (see
/// RootSet ordering). With jobs > 1 the search is split by the first
/// antichain element across worker threads.
std::vector<Ideal> enumerate_ideals(const RootSystem& rs, int jobs = 1);

int sim(const Ideal& ideal);
int gen(const Ideal& ideal);

/// I_1 = I, I_k = (I_{k-1} + I) intersected with the positive roots, stopping
/// before the first empty term.
std::vector<Ideal> lower_central_series(const Ideal& ideal);
int class_of_nilpotence(const Ideal& ideal);

/// I = I_0 < I_1 < ... < I_m = J adding one root at a time, always the
/// lowest-index root that keeps the result an ideal.
std::vector<Ideal> chain_between(const Ideal& lower, const Ideal& upper);

/// H = {gamma : (gamma, theta) > 0}.
Ideal heisenberg_ideal(const RootSystem& rs);
/// Roots of height >= k.
Ideal height_ideal(const RootSystem& rs, int k);
/// Roots of height exactly k.
std::vector<int> roots_of_height(const RootSystem& rs, int k);

/// Positive roots supported on a subset J of the simple roots, with the
/// induced order. Covers reducible subsystems without identifying types.
class RootPoset {
 public:
  static RootPoset full(const RootSystem& rs);
  static RootPoset restricted(const RootSystem& rs, std::span<const int> simple_subset);

  int size() const { return static_cast<int>(ambient_.size()); }
  const std::vector<int>& ambient_indices() const { return ambient_; }
  const RootSet& above(int i) const { return above_[i]; }
  const RootSet& below(int i) const { return below_[i]; }
  const RootSet& simple_elements() const { return simple_; }

 private:
  std::vector<int> ambient_;
  std::vector<RootSet> above_;
  std::vector<RootSet> below_;
  RootSet simple_;
};

RootPoset sub_poset(const RootSystem& rs, std::span<const int> simple_subset);
/// Cached RootPoset::full for a shared root system.
const RootPoset& full_poset(const RootSystem& rs);

/// Visits every antichain of the poset once (depth-first by least element),
/// passing the antichain (poset-local indices) and its up-closure.
void for_each_antichain(const RootPoset& poset,
                        const std::function<void(const std::vector<int>&, const RootSet&)>& visit);

struct PosetCounts {
  std::int64_t total = 0;
  std::vector<std::int64_t> by_sim;  // index = number of simple roots in the ideal
  std::vector<std::int64_t> by_gen;  // index = number of generators
};
PosetCounts count_ideals(const RootPoset& poset);

using Polynomial = std::vector<std::int64_t>;

/// Coefficients of S(q) = sum_i #{I : sim(I) = i} q^i.
Polynomial sim_polynomial(const RootSystem& rs);
/// Coefficients of N(q) = sum_k #{I : gen(I) = k} q^k.
Polynomial narayana_polynomial(const RootSystem& rs);

struct IdealStats {
  int size = 0;
  int sim = 0;
  int gen = 0;
  int nilpotence_class = 0;
};

struct StatTable {
  std::vector<IdealStats> records;  // same order as enumerate_ideals
  Polynomial sim_poly;
  Polynomial narayana_poly;
};
StatTable tabulate(const RootSystem& rs, int jobs = 1);

struct ClosedFormCounts {
  std::int64_t total = 0;      // prod (h + e_i + 1) / (e_i + 1)
  std::int64_t no_simple = 0;  // prod (h + e_i - 1) / (e_i + 1)
};
/// Throws InternalError if either product is not an integer.
ClosedFormCounts closed_form_counts(const RootSystem& rs);

struct RecurrenceReport {
  Polynomial enumerated;       // sim_polynomial
  Polynomial from_subsystems;  // #AD_i = sum_{|J| = p-i} #AD(g(J))_0
  std::int64_t inclusion_exclusion_zero = 0;  // sum_J (-1)^{p-|J|} #AD(g(J))
  bool multiplicative = true;  // #AD(g(J)) = product over connected components
  bool ok = false;
  std::vector<std::string> mismatches;
};
RecurrenceReport recurrence_check(const RootSystem& rs);

}  // namespace adnil
