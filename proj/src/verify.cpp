#include "adnil/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "adnil/affine.hpp"
#include "adnil/arrange.hpp"
#include "adnil/duality.hpp"
#include "adnil/ideals.hpp"
#include "adnil/record.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

namespace {

using System = std::pair<LieType, int>;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxFailures = 40;
constexpr int kSampleSize = 500;
constexpr unsigned kSampleSeed = 20260;

template <class Message>
void check(ClaimResult& r, bool ok, Message&& message) {
  ++r.checks;
  if (ok) return;
  r.passed = false;
  if (r.failures.size() < kMaxFailures) r.failures.push_back(message());
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::int64_t catalan(int m) { return binomial(2 * m, m) / (m + 1); }

std::string join(const Polynomial& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

std::int64_t at_minus_one(const Polynomial& v) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k % 2 ? -1 : 1) * v[k];
  return s;
}

int limit(Scope scope, int full) { return scope == Scope::kQuick ? std::min(full, 4) : full; }

std::vector<System> catalog(int max_rank) {
  std::vector<System> out;
  for (int p = 1; p <= max_rank; ++p) out.push_back({LieType::A, p});
  for (int p = 2; p <= max_rank; ++p) out.push_back({LieType::B, p});
  for (int p = 2; p <= max_rank; ++p) out.push_back({LieType::C, p});
  for (int p = 4; p <= max_rank; ++p) out.push_back({LieType::D, p});
  for (int p = 6; p <= std::min(max_rank, 8); ++p) out.push_back({LieType::E, p});
  if (max_rank >= 4) out.push_back({LieType::F, 4});
  if (max_rank >= 2) out.push_back({LieType::G, 2});
  return out;
}

// A1-A8, B2-B6, C2-C6, D4-D7, E6-E8, F4, G2.
std::vector<System> counting_systems(Scope scope) {
  if (scope == Scope::kQuick) return catalog(4);
  std::vector<System> out;
  for (auto s : catalog(8)) {
    const bool bc = s.first == LieType::B || s.first == LieType::C;
    if ((bc && s.second > 6) || (s.first == LieType::D && s.second > 7)) continue;
    out.push_back(s);
  }
  return out;
}

std::string name_of(const System& s) { return root_system(s.first, s.second).name(); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------------------------------------------------------------------------

void total_counts(ClaimResult& r, Scope scope, int jobs) {
  const auto t0 = Clock::now();
  for (const auto& s : counting_systems(scope)) {
    const RootSystem& rs = root_system(s.first, s.second);
    const auto ts = Clock::now();
    const std::int64_t enumerated = static_cast<std::int64_t>(enumerate_ideals(rs, jobs).size());
    const double dt = seconds_since(ts);
    const std::int64_t expected = closed_form_counts(rs).total;
    check(r, enumerated == expected, [&] {
      return rs.name() + ": enumerated " + std::to_string(enumerated) + ", product formula " + std::to_string(expected);
    });
    check(r, count_ideals(full_poset(rs)).total == enumerated, [&] { return rs.name() + ": antichain count differs"; });
    if (s == System{LieType::E, 8}) {
      check(r, enumerated == 25080, [&] { return "E8: expected 25080 ideals, got " + std::to_string(enumerated); });
      check(r, dt < 60, [&] { return "E8 enumeration took " + std::to_string(dt) + " s"; });
      r.notes.push_back("E8 enumeration: " + std::to_string(dt) + " s");
    }
  }
  const double total = seconds_since(t0);
  check(r, total < 300, [&] { return "sweep took " + std::to_string(total) + " s"; });
}

void sim_tables(ClaimResult& r, Scope scope, int) {
  const std::map<System, Polynomial> golden = {
      {{LieType::F, 4}, {66, 24, 10, 4, 1}},
      {{LieType::E, 6}, {418, 228, 110, 50, 20, 6, 1}},
      {{LieType::E, 7}, {2431, 1001, 429, 187, 77, 27, 7, 1}},
      {{LieType::E, 8}, {17342, 4784, 1771, 728, 299, 112, 35, 8, 1}},
  };
  for (const auto& [s, want] : golden) {
    if (s.second > limit(scope, 8)) continue;
    const Polynomial got = sim_polynomial(root_system(s.first, s.second));
    check(r, got == want, [&] { return name_of(s) + ": got " + join(got) + ", expected " + join(want); });
  }
}

void no_simple(ClaimResult& r, Scope scope, int) {
  for (const auto& s : counting_systems(scope)) {
    const RootSystem& rs = root_system(s.first, s.second);
    const PosetCounts counts = count_ideals(full_poset(rs));
    const ClosedFormCounts cf = closed_form_counts(rs);
    const ZaslavskyCounts z = zaslavsky_counts(rs);
    check(r, counts.by_sim[0] == cf.no_simple, [&] {
      return rs.name() + ": " + std::to_string(counts.by_sim[0]) + " ideals without simple roots, product formula " +
             std::to_string(cf.no_simple);
    });
    check(r, z.dominant_bounded == cf.no_simple, [&] {
      return rs.name() + ": |chi(1)|/|W| = " + std::to_string(z.dominant_bounded) + " vs " + std::to_string(cf.no_simple);
    });
    check(r, z.dominant_regions == counts.total, [&] {
      return rs.name() + ": |chi(-1)|/|W| = " + std::to_string(z.dominant_regions) + " vs " +
             std::to_string(counts.total);
    });
    const CharPoly chi = char_poly(rs);
    const auto coeffs = chi.expanded();
    for (int t = -2; t <= 2; ++t) {
      Rational v(0), power(1);
      for (auto c : coeffs) {
        v += power * c;
        power *= t;
      }
      check(r, v == chi(Rational(t)), [&] { return rs.name() + ": factored and expanded chi differ at " + std::to_string(t); });
    }
  }
}

void sim_sl(ClaimResult& r, Scope scope, int) {
  for (int p = 1; p <= limit(scope, 7); ++p) {
    const Polynomial got = sim_polynomial(root_system(LieType::A, p));
    for (int i = 0; i <= p; ++i) {
      // #AD_i * (p + 1) = (i + 1) C(2p - i, p)
      check(r, got[i] * (p + 1) == (i + 1) * binomial(2 * p - i, p), [&] {
        return "A" + std::to_string(p) + " i=" + std::to_string(i) + ": enumerated " + std::to_string(got[i]);
      });
    }
  }
}

void sim_sp(ClaimResult& r, Scope scope, int) {
  for (int p = 2; p <= limit(scope, 6); ++p) {
    const Polynomial got = sim_polynomial(root_system(LieType::C, p));
    for (int i = 0; i <= p; ++i) {
      const std::int64_t want = binomial(2 * p - 1 - i, p - 1);
      check(r, got[i] == want, [&] {
        return "counterexample C" + std::to_string(p) + " i=" + std::to_string(i) + ": enumerated " +
               std::to_string(got[i]) + ", conjectured " + std::to_string(want);
      });
    }
  }
  for (int p = 4; p <= limit(scope, 7); ++p) {
    const Polynomial got = sim_polynomial(root_system(LieType::D, p));
    for (int i = 0; i <= p; ++i) {
      const std::int64_t want = i == 0 ? binomial(2 * p - 2, p - 2) + binomial(2 * p - 3, p - 3)
                                       : binomial(2 * p - 2 - i, p - 2) + binomial(2 * p - 3 - i, p - 2);
      check(r, got[i] == want, [&] {
        return "counterexample D" + std::to_string(p) + " i=" + std::to_string(i) + ": enumerated " +
               std::to_string(got[i]) + ", conjectured " + std::to_string(want);
      });
    }
  }
}

void narayana(ClaimResult& r, Scope scope, int) {
  const std::map<System, Polynomial> golden = {
      {{LieType::G, 2}, {1, 6, 1}},
      {{LieType::F, 4}, {1, 24, 55, 24, 1}},
      {{LieType::E, 6}, {1, 36, 204, 351, 204, 36, 1}},
      {{LieType::E, 7}, {1, 63, 546, 1470, 1470, 546, 63, 1}},
      {{LieType::E, 8}, {1, 120, 1540, 6120, 9518, 6120, 1540, 120, 1}},
  };
  for (const auto& [s, want] : golden) {
    if (s.second > limit(scope, 8)) continue;
    const Polynomial got = narayana_polynomial(root_system(s.first, s.second));
    check(r, got == want, [&] { return name_of(s) + ": got " + join(got) + ", expected " + join(want); });
  }
  for (int n = 2; n <= limit(scope, 8) + 1; ++n) {
    const Polynomial got = narayana_polynomial(root_system(LieType::A, n - 1));
    for (int k = 0; k < n; ++k)
      check(r, got[k] * n == binomial(n, k) * binomial(n, k + 1), [&] {
        return "A" + std::to_string(n - 1) + " k=" + std::to_string(k) + ": got " + std::to_string(got[k]);
      });
  }
  for (LieType t : {LieType::B, LieType::C}) {
    for (int p = 2; p <= limit(scope, 6); ++p) {
      const RootSystem& rs = root_system(t, p);
      const Polynomial got = narayana_polynomial(rs);
      for (int k = 0; k <= p; ++k)
        check(r, got[k] == binomial(p, k) * binomial(p, k), [&] {
          return rs.name() + " k=" + std::to_string(k) + ": got " + std::to_string(got[k]);
        });
    }
  }
  for (const auto& s : catalog(limit(scope, 8))) {
    const Polynomial got = narayana_polynomial(root_system(s.first, s.second));
    Polynomial reversed(got.rbegin(), got.rend());
    check(r, got == reversed, [&] { return name_of(s) + ": not palindromic: " + join(got); });
  }
}

void narayana_d(ClaimResult& r, Scope scope, int) {
  for (int p = 4; p <= limit(scope, 7); ++p) {
    const Polynomial got = narayana_polynomial(root_system(LieType::D, p));
    for (int k = 0; k <= p; ++k) {
      const std::int64_t numerator =
          binomial(p, k) * binomial(p, k) * (p - 1) - p * binomial(p - 1, k) * binomial(p - 1, k - 1);
      check(r, numerator % (p - 1) == 0 && got[k] == numerator / (p - 1), [&] {
        return "D" + std::to_string(p) + " k=" + std::to_string(k) + ": got " + std::to_string(got[k]);
      });
    }
  }
}

// Per-ideal geometry checks shared by the exhaustive and sampled sweeps.
void check_geometry(ClaimResult& r, const Ideal& ideal, std::vector<RationalVector>& points) {
  const RootSystem& rs = ideal.system();
  const AffineWeylElement w = admissible_element(ideal);
  const std::string where = rs.name() + " ideal " + describe(rs, generators(ideal));
  int series_total = 0;
  for (const auto& term : lower_central_series(ideal)) series_total += term.size();
  check(r, is_admissible(w), [&] { return where + ": w<I> is not admissible"; });
  check(r, w.length() == series_total, [&] { return where + ": length differs from sum of |I_k|"; });
  check(r, w.inversion_set() == phi_set(ideal), [&] { return where + ": inversion set differs from Phi"; });
  check(r, ideal_of(w) == ideal, [&] { return where + ": I_w differs from I"; });
  const LatticePoint d = d_point(w);
  check(r, simplex_contains(rs, d) && d.in_coroot_lattice(rs), [&] { return where + ": d_I outside the simplex"; });
  check(r, simplex_face_codim(rs, d) == gen(ideal), [&] { return where + ": face codimension differs from gen"; });
  const AffineWeylElement inv = w.inverse();
  for (int i = 0; i < rs.rank(); ++i) {
    RationalVector x(rs.rank(), Rational(0));
    x[i] = 1;
    auto [image, delta] = inv.apply(x, Rational(0));
    check(r, delta == rs.inner(x, d.coords), [&] { return where + ": w^{-1} delta term differs from (x, d)"; });
  }
  points.push_back(d.coords);
}

void check_vertices(ClaimResult& r, const RootSystem& rs) {
  const auto vertices = simplex_vertices(rs);
  int integral = 0;
  for (const auto& v : vertices) integral += v.in_coroot_lattice(rs) ? 1 : 0;
  check(r, integral == 1, [&] { return rs.name() + ": " + std::to_string(integral) + " integral vertices"; });
  RootSet all;
  for (int g = 0; g < rs.num_positive(); ++g) all.set(g);
  const LatticePoint d_top = d_point(admissible_element(Ideal(rs, all)));
  bool found = false;
  for (const auto& v : vertices) found = found || (v.in_coroot_lattice(rs) && v == d_top);
  check(r, found, [&] { return rs.name() + ": integral vertex is not d of the full ideal"; });
}

void cp_geometry(ClaimResult& r, Scope scope, int jobs) {
  for (const auto& s : catalog(limit(scope, 6))) {
    const RootSystem& rs = root_system(s.first, s.second);
    const auto ideals = enumerate_ideals(rs, jobs);
    std::vector<RationalVector> points;
    for (const auto& ideal : ideals) check_geometry(r, ideal, points);
    std::sort(points.begin(), points.end());
    const bool injective = std::adjacent_find(points.begin(), points.end()) == points.end();
    check(r, injective, [&] { return rs.name() + ": I -> d_I is not injective"; });
    std::vector<RationalVector> lattice;
    for (const auto& pt : lattice_points_in_simplex(rs)) lattice.push_back(pt.coords);
    check(r, points == lattice, [&] { return rs.name() + ": image of I -> d_I is not the lattice point set"; });
    check_vertices(r, rs);
  }
  if (scope == Scope::kQuick) return;
  std::mt19937 rng(kSampleSeed);
  for (int p : {7, 8}) {
    const RootSystem& rs = root_system(LieType::E, p);
    const auto ideals = enumerate_ideals(rs, jobs);
    std::vector<Ideal> sample;
    std::sample(ideals.begin(), ideals.end(), std::back_inserter(sample), kSampleSize, rng);
    std::vector<RationalVector> points;
    for (const auto& ideal : sample) check_geometry(r, ideal, points);
    std::vector<RationalVector> lattice;
    for (const auto& pt : lattice_points_in_simplex(rs)) lattice.push_back(pt.coords);
    check(r, lattice.size() == ideals.size(), [&] { return rs.name() + ": lattice point count differs"; });
    std::sort(points.begin(), points.end());
    check(r, std::adjacent_find(points.begin(), points.end()) == points.end(),
          [&] { return rs.name() + ": sampled d_I collide"; });
    for (const auto& pt : points)
      check(r, std::binary_search(lattice.begin(), lattice.end(), pt),
            [&] { return rs.name() + ": sampled d_I missing from lattice points"; });
    check_vertices(r, rs);
    r.notes.push_back(rs.name() + ": " + std::to_string(sample.size()) + " sampled ideals");
  }
}

void generator_criterion_claim(ClaimResult& r, Scope scope, int jobs) {
  long long branch_positive = 0, branch_delta = 0;
  for (const auto& s : catalog(limit(scope, 5))) {
    const RootSystem& rs = root_system(s.first, s.second);
    for (const auto& ideal : enumerate_ideals(rs, jobs)) {
      const AffineWeylElement w = admissible_element(ideal);
      const Antichain gens = generators(ideal);
      const std::string where = rs.name() + " ideal " + describe(rs, gens);
      ideal.members().for_each([&](int g) {
        check(r, generator_criterion(w, g) == gens.contains(g),
              [&] { return where + ": criterion wrong for root " + root_label(rs.root(g)); });
      });
      check(r, inverse_descent_count(w) == gens.size(), [&] { return where + ": descent count differs from gen"; });
      check(r, class_criterion(w) == class_of_nilpotence(ideal), [&] { return where + ": class criterion differs"; });
      if (class_of_nilpotence(ideal) > 1) {
        (class_criterion_branch(w) == ClassBranch::kPositiveRoot ? branch_positive : branch_delta)++;
      }
    }
    // Heisenberg anchor. In A1 H = {theta} is abelian and w<H> = s_0.
    const Ideal heis = heisenberg_ideal(rs);
    const AffineWeylElement w = admissible_element(heis);
    const auto s_theta_s_0 =
        AffineWeylElement::theta_reflection(rs) * AffineWeylElement::simple_reflection(rs, 0);
    std::vector<int> minus_theta = rs.coroot_coords(rs.highest_root_index());
    for (int& c : minus_theta) c = -c;
    if (rs.rank() >= 2) {
      check(r, w == s_theta_s_0 && w == AffineWeylElement::translation(rs, minus_theta),
            [&] { return rs.name() + ": w<H> is not s_theta s_0 = t_{-theta}"; });
      check(r, class_of_nilpotence(heis) == 2 && class_criterion(w) == 2,
            [&] { return rs.name() + ": Heisenberg ideal does not have class 2"; });
      AffineRoot a = w.apply(affine_simple_root(rs, 0));
      a.level += 2;
      check(r, a == AffineRoot{rs.negate(rs.highest_root_index()), 1},
            [&] { return rs.name() + ": w(alpha_0) + 2 delta is not delta - theta"; });
    } else {
      check(r, w == AffineWeylElement::simple_reflection(rs, 0), [&] { return rs.name() + ": w<H> is not s_0"; });
    }
    const Ideal top_root = up_closure(rs, std::vector<int>{rs.highest_root_index()});
    const AffineWeylElement wt = admissible_element(top_root);
    check(r, class_criterion(wt) == 1 && class_criterion_branch(wt) == ClassBranch::kPositiveRoot,
          [&] { return rs.name() + ": ideal {theta} does not land in the positive roots"; });
  }
  r.notes.push_back("class > 1 witnesses: " + std::to_string(branch_positive) + " in Delta+, " +
                    std::to_string(branch_delta) + " in delta - Delta+");
}

void duality_a(ClaimResult& r, Scope scope, int) {
  for (int n = 2; n <= limit(scope, 8) + 1; ++n) {
    const RootSystem& rs = root_system(LieType::A, n - 1);
    for (const auto& ideal : enumerate_ideals(rs)) {
      const TypeACoords c = coords_A(ideal);
      const TypeACoords d = dual_A(c);
      check(r, dual_A(d) == c, [&] { return "sl" + std::to_string(n) + ": not an involution"; });
      check(r, d.x.size() + c.x.size() == static_cast<std::size_t>(n - 1),
            [&] { return "sl" + std::to_string(n) + ": generator counts do not pair to n-1"; });
      check(r, ideal_from_coords_A(rs, c) == ideal, [&] { return "sl" + std::to_string(n) + ": coordinate round trip"; });
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> in, out;
      for (int i = 0; i < n - 1; ++i) ((mask >> i) & 1u ? in : out).push_back(i);
      check(r, dual(rs, Antichain(rs, in)) == Antichain(rs, out),
            [&] { return "sl" + std::to_string(n) + ": I(A)* != I(Pi \\ A)"; });
    }
    for (int k = 1; k <= n; ++k)
      check(r, dual(height_ideal(rs, k)) == height_ideal(rs, n + 1 - k), [&] {
        return "sl" + std::to_string(n) + ": height ideal " + std::to_string(k) + " does not map to " +
               std::to_string(n + 1 - k);
      });
    if (n - 1 <= limit(scope, 7)) {
      const ConjectureReport rep = conjecture_properties_check(rs, [&](const Antichain& a) { return dual(rs, a); });
      check(r, rep.ok(), [&] {
        return "sl" + std::to_string(n) + ": " + (rep.violations.empty() ? "property failure" : rep.violations[0]);
      });
    }
  }
  for (int n = 2; n <= (scope == Scope::kQuick ? 7 : 11); ++n) {
    const auto fixed = self_dual_ideals_A(n);
    const std::size_t want = n % 2 == 0 ? 0 : static_cast<std::size_t>(catalan((n - 1) / 2));
    check(r, fixed.size() == want, [&] {
      return "sl" + std::to_string(n) + ": " + std::to_string(fixed.size()) + " self-dual ideals, expected " +
             std::to_string(want);
    });
  }
  const std::set<TypeACoords> listed = {
      {7, {1, 2, 3}, {5, 6, 7}}, {7, {1, 2, 4}, {4, 6, 7}}, {7, {1, 2, 5}, {4, 5, 7}},
      {7, {1, 3, 4}, {3, 6, 7}}, {7, {1, 3, 5}, {3, 5, 7}},
  };
  const auto fixed7 = self_dual_ideals_A(7);
  check(r, std::set<TypeACoords>(fixed7.begin(), fixed7.end()) == listed,
        [&] { return "sl7: self-dual ideals differ from the five listed"; });
}

struct TableRow {
  std::vector<RootVector> gamma;
  std::vector<RootVector> star;
};

Antichain from_vectors(const RootSystem& rs, const std::vector<RootVector>& vs) {
  std::vector<int> roots;
  for (const auto& v : vs) roots.push_back(*rs.index_of(v));
  return Antichain(rs, roots);
}

void check_table(ClaimResult& r, const RootSystem& rs, const std::vector<TableRow>& rows) {
  for (const auto& row : rows) {
    const Antichain g = from_vectors(rs, row.gamma);
    const Antichain s = from_vectors(rs, row.star);
    check(r, dual(rs, g) == s && dual(rs, s) == g, [&] {
      return rs.name() + ": " + describe(rs, g) + " maps to " + describe(rs, dual(rs, g)) + ", expected " +
             describe(rs, s);
    });
  }
}

void duality_bc(ClaimResult& r, Scope scope, int) {
  const std::vector<TableRow> rows_c = {
      {{{1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}}},
      {{{0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}}},
      {{{0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}}},
      {{{1, 1, 0}}, {{1, 1, 0}, {0, 0, 1}}},
      {{{0, 1, 1}}, {{0, 2, 1}, {1, 0, 0}}},
      {{{0, 2, 1}}, {{0, 1, 1}, {1, 0, 0}}},
      {{{1, 1, 1}}, {{1, 1, 0}, {0, 2, 1}}},
      {{{1, 2, 1}}, {{1, 1, 1}, {0, 2, 1}}},
      {{{2, 2, 1}}, {{1, 1, 0}, {0, 1, 1}}},
  };
  const std::vector<TableRow> rows_b = {
      {{{1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}}},
      {{{0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}}},
      {{{0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}}},
      {{{1, 1, 0}}, {{1, 1, 0}, {0, 0, 1}}},
      {{{0, 1, 1}}, {{0, 1, 2}, {1, 0, 0}}},
      {{{0, 1, 2}}, {{0, 1, 1}, {1, 0, 0}}},
      {{{1, 1, 1}}, {{1, 1, 0}, {0, 1, 2}}},
      {{{1, 1, 2}}, {{1, 1, 1}, {0, 1, 2}}},
      {{{1, 2, 2}}, {{1, 1, 0}, {0, 1, 1}}},
  };
  check_table(r, root_system(LieType::C, 3), rows_c);
  check_table(r, root_system(LieType::B, 3), rows_b);
  check_table(r, root_system(LieType::C, 4), {{{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 1}}, {{0, 1, 1, 1}}}});
  for (LieType t : {LieType::B, LieType::C}) {
    for (int p = 2; p <= limit(scope, 6); ++p) {
      const RootSystem& rs = root_system(t, p);
      const ConjectureReport rep = conjecture_properties_check(rs, [&](const Antichain& a) { return dual(rs, a); });
      check(r, rep.involution && rep.generator_pairing && rep.long_short,
            [&] { return rs.name() + ": " + (rep.violations.empty() ? "property failure" : rep.violations[0]); });
      check(r, rep.fixed_points == 0, [&] { return rs.name() + ": self-dual ideal found"; });
      check(r, rep.ok(), [&] {
        return rs.name() + ": " + (rep.violations.empty() ? "property failure" : rep.violations[0]);
      });
    }
  }
}

void duality_g2(ClaimResult& r, Scope, int) {
  const RootSystem& rs = root_system(LieType::G, 2);
  const auto found = find_dualities(rs, 8);
  check(r, found.size() == 1, [&] { return "G2: " + std::to_string(found.size()) + " admissible involutions"; });
  if (!found.empty())
    for (const auto& [gamma, star] : found.front())
      check(r, dual(rs, gamma) == star, [&] { return "G2: frozen table differs at " + describe(rs, gamma); });
  const ConjectureReport rep = conjecture_properties_check(rs, [&](const Antichain& a) { return dual(rs, a); });
  check(r, rep.ok(), [&] { return "G2: " + (rep.violations.empty() ? std::string("property failure") : rep.violations[0]); });
}

void region_witness_claim(ClaimResult& r, Scope, int) {
  for (const auto& s : catalog(4)) {
    const RootSystem& rs = root_system(s.first, s.second);
    std::set<RootSet> patterns;
    long long bounded = 0;
    for (const auto& ideal : enumerate_ideals(rs)) {
      const std::string where = rs.name() + " ideal " + describe(rs, generators(ideal));
      const RegionWitness w = region_witness(ideal);
      const RootSet pattern = region_pattern(rs, w.point);
      check(r, in_region(ideal, w.point) && pattern == ideal.members(),
            [&] { return where + ": witness has the wrong sign pattern"; });
      patterns.insert(pattern);
      const bool is_bounded = is_bounded_region(ideal);
      bounded += is_bounded ? 1 : 0;
      check(r, is_bounded == (sim(ideal) == 0), [&] { return where + ": boundedness disagrees with sim"; });
      if (rs.rank() <= 3) {
        // Exercise the elimination fallback on its own.
        const int p = rs.rank();
        std::vector<StrictInequality> system;
        for (int i = 0; i < p; ++i) {
          StrictInequality q{RationalVector(p, Rational(0)), Rational(0)};
          q.coeffs[i] = 1;
          system.push_back(q);
        }
        for (int g = 0; g < rs.num_positive(); ++g) {
          const int sign = ideal.contains(g) ? 1 : -1;
          StrictInequality q{RationalVector(p, Rational(0)), Rational(-sign)};
          for (int j = 0; j < p; ++j) q.coeffs[j] = sign * rs.root(g)[j];
          system.push_back(q);
        }
        auto a = solve_strict(system, p);
        bool ok = a.has_value();
        if (ok) {
          RationalVector x(p, Rational(0));
          for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) x[j] += (*a)[i] * rs.fundamental_coweight(i)[j];
          ok = in_region(ideal, x);
        }
        check(r, ok, [&] { return where + ": elimination found no point"; });
      }
    }
    check(r, patterns.size() == static_cast<std::size_t>(closed_form_counts(rs).total),
          [&] { return rs.name() + ": witness patterns are not pairwise distinct"; });
    check(r, bounded == zaslavsky_counts(rs).dominant_bounded,
          [&] { return rs.name() + ": bounded region count differs from |chi(1)|/|W|"; });
  }
}

void q_minus_one(ClaimResult& r, Scope scope, int) {
  for (int n = 2; n <= (scope == Scope::kQuick ? 7 : 11); ++n) {
    const std::int64_t got = at_minus_one(narayana_polynomial(root_system(LieType::A, n - 1)));
    const int m = (n - 1) / 2;
    const std::int64_t want = n % 2 == 0 ? 0 : (m % 2 ? -1 : 1) * catalan(m);
    check(r, got == want, [&] {
      return "N_" + std::to_string(n) + "(-1) = " + std::to_string(got) + ", expected " + std::to_string(want);
    });
    const auto fixed = static_cast<std::int64_t>(self_dual_ideals_A(n).size());
    check(r, (got < 0 ? -got : got) == fixed, [&] { return "sl" + std::to_string(n) + ": |N(-1)| != self-dual count"; });
  }
  for (LieType t : {LieType::B, LieType::C}) {
    for (int p = 2; p <= limit(scope, 8); ++p) {
      const RootSystem& rs = root_system(t, p);
      const std::int64_t got = at_minus_one(narayana_polynomial(rs));
      std::int64_t alternating = 0;
      for (int k = 0; k <= p; ++k) alternating += (k % 2 ? -1 : 1) * binomial(p, k) * binomial(p, k);
      const std::int64_t want = p % 2 ? 0 : ((p / 2) % 2 ? -1 : 1) * binomial(p, p / 2);
      check(r, got == want && alternating == want, [&] {
        return rs.name() + ": N(-1) = " + std::to_string(got) + ", expected " + std::to_string(want);
      });
    }
  }
  for (int p = 4; p <= limit(scope, 7); ++p) {
    const std::int64_t got = at_minus_one(narayana_polynomial(root_system(LieType::D, p)));
    const std::int64_t want = p % 2 ? 0 : ((p / 2) % 2 ? -1 : 1) * 2 * binomial(p - 2, p / 2);
    check(r, got == want, [&] {
      return "D" + std::to_string(p) + ": N(-1) = " + std::to_string(got) + ", expected " + std::to_string(want);
    });
  }
}

void sim_recurrence(ClaimResult& r, Scope scope, int) {
  for (const auto& s : catalog(limit(scope, 6))) {
    const RecurrenceReport rep = recurrence_check(root_system(s.first, s.second));
    check(r, rep.ok, [&] { return name_of(s) + ": " + (rep.mismatches.empty() ? "mismatch" : rep.mismatches[0]); });
  }
}

using ClaimFn = std::function<void(ClaimResult&, Scope, int)>;

const std::vector<std::pair<ClaimInfo, ClaimFn>>& registry() {
  static const std::vector<std::pair<ClaimInfo, ClaimFn>> table = {
      {{"total-counts", "ideal counts equal prod (h + e_i + 1)/(e_i + 1); E8 has 25080"}, total_counts},
      {{"sim-tables", "sim coefficient rows for F4, E6, E7, E8"}, sim_tables},
      {{"no-simple", "ideals without simple roots vs product formula and |chi(1)|/|W|"}, no_simple},
      {{"sim-sl", "#AD(A_p)_i = (i+1)/(p+1) C(2p-i, p), p <= 7"}, sim_sl},
      {{"sim-sp", "#AD(C_p)_i and #AD(D_p)_i binomial formulas, C up to 6, D up to 7"}, sim_sp},
      {{"narayana", "generator-count polynomials: exceptional rows, A, B/C, palindromicity"}, narayana},
      {{"cp-geometry", "admissible elements, lengths, d-points, simplex faces and vertices"}, cp_geometry},
      {{"generator-criterion", "generator and class criteria from w<I>; Heisenberg anchor"}, generator_criterion_claim},
      {{"duality-a", "type A duality: involution, pairing, simple subsets, heights, self-dual counts"}, duality_a},
      {{"duality-bc", "types B/C duality: sp6 and so7 tables, properties, no fixed points"}, duality_bc},
      {{"region-witness", "exact witness points for the dominant Catalan regions, rank <= 4"}, region_witness_claim},
      {{"q-minus-one", "N(-1) for A (n <= 11), B/C (p <= 8), D (p <= 7)"}, q_minus_one},
      {{"narayana-d", "N_{D_p} coefficients C(p,k)^2 - p/(p-1) C(p-1,k) C(p-1,k-1), p <= 7"}, narayana_d},
      {{"duality-g2", "the G2 involution is unique and satisfies every property"}, duality_g2},
      {{"sim-recurrence", "sim counts from parabolic subsystems, rank <= 6"}, sim_recurrence},
  };
  return table;
}

}  // namespace

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& [info, fn] : registry()) out.push_back(info);
    return out;
  }();
  return infos;
}

ClaimResult run_claim(std::string_view name, Scope scope, int jobs) {
  for (const auto& [info, fn] : registry()) {
    if (info.name != name) continue;
    ClaimResult r;
    r.name = info.name;
    const auto t0 = Clock::now();
    try {
      fn(r, scope, jobs);
    } catch (const std::exception& e) {
      r.passed = false;
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = seconds_since(t0);
    return r;
  }
  throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

std::vector<ClaimResult> run_all(Scope scope, int jobs) {
  std::vector<ClaimResult> out;
  for (const auto& info : claims()) out.push_back(run_claim(info.name, scope, jobs));
  return out;
}

nlohmann::json to_json(const ClaimResult& r) {
  return {{"claim", r.name},       {"passed", r.passed}, {"checks", r.checks},
          {"failures", r.failures}, {"notes", r.notes},   {"seconds", r.seconds}};
}

}  // namespace adnil
