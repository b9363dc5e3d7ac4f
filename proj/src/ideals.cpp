#include "adnil/ideals.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "adnil/error.hpp"

namespace adnil {

namespace {

std::string root_label(const RootSystem& rs, int i) {
  std::string s;
  for (int c : rs.root(i)) s += std::to_string(c);
  return s;
}

}  // namespace

bool root_leq(const RootSystem& rs, int mu, int nu) {
  const auto& a = rs.root(mu);
  const auto& b = rs.root(nu);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

Antichain::Antichain(const RootSystem& rs, std::vector<int> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  for (int r : roots_) {
    if (r < 0 || r >= rs.num_positive())
      throw std::invalid_argument("root index " + std::to_string(r) + " out of range for " + rs.name());
  }
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    for (std::size_t b = a + 1; b < roots_.size(); ++b) {
      if (root_leq(rs, roots_[a], roots_[b]) || root_leq(rs, roots_[b], roots_[a])) {
        throw std::invalid_argument("not an antichain: roots " + root_label(rs, roots_[a]) + " and " +
                                    root_label(rs, roots_[b]) + " are comparable");
      }
    }
  }
}

bool Antichain::contains(int root) const { return std::binary_search(roots_.begin(), roots_.end(), root); }

Ideal::Ideal(const RootSystem& rs, RootSet members) : rs_(&rs), members_(members) {
  const int n = rs.num_positive();
  for (int i = 0; i < RootSet::kCapacity; ++i) {
    if (i >= n && members.test(i)) throw std::invalid_argument("ideal contains an index beyond the positive roots");
  }
  members.for_each([&](int g) {
    for (int nu = 0; nu < n; ++nu) {
      auto s = rs.root_sum(g, nu);
      if (s && !members.test(*s)) {
        throw std::invalid_argument("not an ideal: contains " + root_label(rs, g) + " but not " +
                                    root_label(rs, *s));
      }
    }
  });
}

Ideal make_ideal_unchecked(const RootSystem& rs, RootSet members) { return Ideal(rs, members, Ideal::Unchecked{}); }

RootSet roots_above(const RootSystem& rs, int root) { return full_poset(rs).above(root); }
RootSet roots_below(const RootSystem& rs, int root) { return full_poset(rs).below(root); }

Ideal up_closure(const RootSystem& rs, std::span<const int> roots) {
  Antichain a(rs, std::vector<int>(roots.begin(), roots.end()));
  const RootPoset& poset = full_poset(rs);
  RootSet members;
  for (int r : a.roots()) members |= poset.above(r);
  return make_ideal_unchecked(rs, members);
}

Antichain generators(const Ideal& ideal) {
  const RootPoset& poset = full_poset(ideal.system());
  std::vector<int> mins;
  ideal.members().for_each([&](int g) {
    RootSet strictly_below = poset.below(g);
    strictly_below.reset(g);
    if (!strictly_below.intersects(ideal.members())) mins.push_back(g);
  });
  return Antichain(ideal.system(), std::move(mins));
}

// ---------------------------------------------------------------------------
// Posets and enumeration

RootPoset RootPoset::full(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  return restricted(rs, all);
}

RootPoset RootPoset::restricted(const RootSystem& rs, std::span<const int> simple_subset) {
  std::vector<bool> allowed(rs.rank(), false);
  for (int j : simple_subset) {
    if (j < 0 || j >= rs.rank()) throw std::invalid_argument("simple root index out of range");
    allowed[j] = true;
  }
  RootPoset poset;
  for (int i = 0; i < rs.num_positive(); ++i) {
    const auto& v = rs.root(i);
    bool supported = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (v[j] != 0 && !allowed[j]) supported = false;
    if (supported) poset.ambient_.push_back(i);
  }
  const int n = poset.size();
  poset.above_.assign(n, RootSet{});
  poset.below_.assign(n, RootSet{});
  for (int a = 0; a < n; ++a) {
    if (rs.is_simple(poset.ambient_[a])) poset.simple_.set(a);
    for (int b = 0; b < n; ++b) {
      if (root_leq(rs, poset.ambient_[a], poset.ambient_[b])) {
        poset.above_[a].set(b);
        poset.below_[b].set(a);
      }
    }
  }
  return poset;
}

RootPoset sub_poset(const RootSystem& rs, std::span<const int> simple_subset) {
  return RootPoset::restricted(rs, simple_subset);
}

const RootPoset& full_poset(const RootSystem& rs) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::unique_ptr<const RootPoset>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(type_letter(rs.type()), rs.rank());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<const RootPoset>(RootPoset::full(rs))).first;
  return *it->second;
}

namespace {

using Visitor = std::function<void(const std::vector<int>&, const RootSet&)>;

void extend(const RootPoset& poset, int start, std::vector<int>& chosen, const RootSet& closure,
            const RootSet& blocked, const Visitor& visit) {
  visit(chosen, closure);
  for (int c = start; c < poset.size(); ++c) {
    if (blocked.test(c)) continue;
    chosen.push_back(c);
    extend(poset, c + 1, chosen, closure | poset.above(c), blocked | poset.above(c) | poset.below(c), visit);
    chosen.pop_back();
  }
}

// Subtree of antichains whose least element is `first`.
void extend_from(const RootPoset& poset, int first, const Visitor& visit) {
  std::vector<int> chosen{first};
  extend(poset, first + 1, chosen, poset.above(first), poset.above(first) | poset.below(first), visit);
}

}  // namespace

void for_each_antichain(const RootPoset& poset, const Visitor& visit) {
  std::vector<int> chosen;
  extend(poset, 0, chosen, RootSet{}, RootSet{}, visit);
}

std::vector<Ideal> enumerate_ideals(const RootSystem& rs, int jobs) {
  const RootPoset& poset = full_poset(rs);
  std::vector<RootSet> sets;
  if (jobs <= 1) {
    for_each_antichain(poset, [&](const std::vector<int>&, const RootSet& closure) { sets.push_back(closure); });
  } else {
    std::vector<std::future<std::vector<RootSet>>> parts;
    for (int w = 0; w < jobs; ++w) {
      parts.push_back(std::async(std::launch::async, [&poset, w, jobs] {
        std::vector<RootSet> local;
        for (int first = w; first < poset.size(); first += jobs)
          extend_from(poset, first, [&](const std::vector<int>&, const RootSet& c) { local.push_back(c); });
        return local;
      }));
    }
    sets.push_back(RootSet{});
    for (auto& f : parts) {
      auto local = f.get();
      sets.insert(sets.end(), local.begin(), local.end());
    }
  }
  std::sort(sets.begin(), sets.end());
  std::vector<Ideal> ideals;
  ideals.reserve(sets.size());
  for (const auto& s : sets) ideals.push_back(make_ideal_unchecked(rs, s));
  return ideals;
}

PosetCounts count_ideals(const RootPoset& poset) {
  PosetCounts counts;
  const int simple = poset.simple_elements().count();
  counts.by_sim.assign(simple + 1, 0);
  counts.by_gen.assign(simple + 1, 0);
  for_each_antichain(poset, [&](const std::vector<int>& chain, const RootSet& closure) {
    ++counts.total;
    ++counts.by_sim[(closure & poset.simple_elements()).count()];
    if (chain.size() >= counts.by_gen.size()) counts.by_gen.resize(chain.size() + 1, 0);
    ++counts.by_gen[chain.size()];
  });
  return counts;
}

// ---------------------------------------------------------------------------
// Statistics

int sim(const Ideal& ideal) {
  RootSet simple = RootSet::first_n(ideal.system().rank());
  return (ideal.members() & simple).count();
}

int gen(const Ideal& ideal) { return generators(ideal).size(); }

std::vector<Ideal> lower_central_series(const Ideal& ideal) {
  const RootSystem& rs = ideal.system();
  std::vector<Ideal> series;
  if (ideal.empty()) return series;
  series.push_back(ideal);
  while (true) {
    // nu is in I_{k+1} iff nu = a + b with one summand in I_k, the other in I.
    const RootSet& last = series.back().members();
    RootSet next;
    last.for_each([&](int nu) {
      for (auto [a, b] : rs.splittings(nu)) {
        if ((last.test(a) && ideal.contains(b)) || (last.test(b) && ideal.contains(a))) {
          next.set(nu);
          return;
        }
      }
    });
    if (next.empty()) break;
    if (next == last) throw InternalError("lower central series failed to descend");
    series.push_back(make_ideal_unchecked(rs, next));
  }
  return series;
}

int class_of_nilpotence(const Ideal& ideal) { return static_cast<int>(lower_central_series(ideal).size()); }

std::vector<Ideal> chain_between(const Ideal& lower, const Ideal& upper) {
  if (&lower.system() != &upper.system()) throw std::invalid_argument("chain_between: ideals of different systems");
  if (!lower.members().is_subset_of(upper.members()))
    throw std::invalid_argument("chain_between: lower ideal is not contained in the upper one");
  const RootPoset& poset = full_poset(lower.system());
  std::vector<Ideal> chain{lower};
  RootSet current = lower.members();
  while (current != upper.members()) {
    int pick = -1;
    (upper.members() - current).for_each([&](int x) {
      if (pick >= 0) return;
      RootSet strictly_above = poset.above(x);
      strictly_above.reset(x);
      if (strictly_above.is_subset_of(current)) pick = x;
    });
    if (pick < 0) throw InternalError("chain_between: no addable root");
    current.set(pick);
    chain.emplace_back(lower.system(), current);
  }
  return chain;
}

Ideal heisenberg_ideal(const RootSystem& rs) {
  RootSet members;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (rs.theta_pairing(i) > 0) members.set(i);
  return Ideal(rs, members);
}

Ideal height_ideal(const RootSystem& rs, int k) {
  RootSet members;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (rs.height(i) >= k) members.set(i);
  return Ideal(rs, members);
}

std::vector<int> roots_of_height(const RootSystem& rs, int k) {
  std::vector<int> out;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (rs.height(i) == k) out.push_back(i);
  return out;
}

Polynomial sim_polynomial(const RootSystem& rs) { return count_ideals(full_poset(rs)).by_sim; }

Polynomial narayana_polynomial(const RootSystem& rs) {
  Polynomial n = count_ideals(full_poset(rs)).by_gen;
  n.resize(rs.rank() + 1, 0);
  return n;
}

StatTable tabulate(const RootSystem& rs, int jobs) {
  StatTable table;
  table.sim_poly.assign(rs.rank() + 1, 0);
  table.narayana_poly.assign(rs.rank() + 1, 0);
  for (const Ideal& ideal : enumerate_ideals(rs, jobs)) {
    IdealStats s{ideal.size(), sim(ideal), gen(ideal), class_of_nilpotence(ideal)};
    ++table.sim_poly[s.sim];
    ++table.narayana_poly[s.gen];
    table.records.push_back(s);
  }
  return table;
}

ClosedFormCounts closed_form_counts(const RootSystem& rs) {
  Rational total(1), no_simple(1);
  const int h = rs.coxeter_number();
  for (int e : rs.exponents()) {
    total *= Rational(h + e + 1, e + 1);
    no_simple *= Rational(h + e - 1, e + 1);
  }
  auto t = as_integer(total);
  auto z = as_integer(no_simple);
  if (!t || !z) throw InternalError("closed-form count is not an integer for " + rs.name());
  return {*t, *z};
}

RecurrenceReport recurrence_check(const RootSystem& rs) {
  const int p = rs.rank();
  const int subsets = 1 << p;
  std::vector<std::int64_t> total(subsets), zero(subsets);
  for (int mask = 0; mask < subsets; ++mask) {
    std::vector<int> j;
    for (int i = 0; i < p; ++i)
      if (mask >> i & 1) j.push_back(i);
    PosetCounts c = count_ideals(sub_poset(rs, j));
    total[mask] = c.total;
    zero[mask] = c.by_sim[0];
  }

  RecurrenceReport report;
  report.enumerated = sim_polynomial(rs);
  report.from_subsystems.assign(p + 1, 0);
  for (int mask = 0; mask < subsets; ++mask) {
    const int size = std::popcount(static_cast<unsigned>(mask));
    report.from_subsystems[p - size] += zero[mask];
    report.inclusion_exclusion_zero += ((p - size) % 2 == 0 ? 1 : -1) * total[mask];

    // Split J into Dynkin components and compare the product of their counts.
    int remaining = mask;
    std::int64_t product = 1;
    while (remaining) {
      int comp = remaining & -remaining;
      bool grew = true;
      while (grew) {
        grew = false;
        for (int a = 0; a < p; ++a) {
          if (!(comp >> a & 1)) continue;
          for (int b = 0; b < p; ++b) {
            if ((remaining >> b & 1) && !(comp >> b & 1) && rs.adjacent(a, b)) {
              comp |= 1 << b;
              grew = true;
            }
          }
        }
      }
      product *= total[comp];
      remaining &= ~comp;
    }
    if (product != total[mask]) {
      report.multiplicative = false;
      report.mismatches.push_back("subset mask " + std::to_string(mask) + ": count " + std::to_string(total[mask]) +
                                  " != product over components " + std::to_string(product));
    }
  }
  for (int i = 0; i <= p; ++i) {
    if (report.enumerated[i] != report.from_subsystems[i]) {
      report.mismatches.push_back("#AD_" + std::to_string(i) + ": enumerated " + std::to_string(report.enumerated[i]) +
                                  ", from subsystems " + std::to_string(report.from_subsystems[i]));
    }
  }
  if (report.inclusion_exclusion_zero != report.enumerated[0]) {
    report.mismatches.push_back("#AD_0 by inclusion-exclusion " + std::to_string(report.inclusion_exclusion_zero) +
                                " != " + std::to_string(report.enumerated[0]));
  }
  report.ok = report.mismatches.empty();
  return report;
}

}  // namespace adnil
