#include "adnil/arrange.hpp"

#include <map>
#include <stdexcept>

#include "adnil/affine.hpp"
#include "adnil/error.hpp"

namespace adnil {

Rational CharPoly::operator()(const Rational& t) const {
  Rational v(1);
  for (auto r : roots_) v *= t - Rational(r);
  return v;
}

std::vector<std::int64_t> CharPoly::expanded() const {
  std::vector<std::int64_t> c{1};
  for (auto r : roots_) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

CharPoly char_poly(const RootSystem& rs) {
  std::vector<std::int64_t> roots;
  for (int e : rs.exponents()) roots.push_back(rs.coxeter_number() + e);
  return CharPoly(std::move(roots));
}

ZaslavskyCounts zaslavsky_counts(const RootSystem& rs) {
  const CharPoly chi = char_poly(rs);
  const int p = rs.rank();
  const Rational at_minus_one = chi(Rational(-1));
  const Rational at_one = chi(Rational(1));
  ZaslavskyCounts out;
  out.regions = *as_integer(p % 2 == 0 ? at_minus_one : -at_minus_one);
  out.bounded = *as_integer(abs(at_one));
  const std::int64_t order = rs.weyl_group_order();
  if (out.regions % order != 0 || out.bounded % order != 0)
    throw InternalError("region counts of " + rs.name() + " are not divisible by |W|");
  out.dominant_regions = out.regions / order;
  out.dominant_bounded = out.bounded / order;
  return out;
}

bool is_bounded_region(const Ideal& ideal) {
  for (int i = 0; i < ideal.system().rank(); ++i)
    if (ideal.contains(i)) return false;
  return true;
}

namespace {

// (x, alpha_i) for every simple root.
RationalVector simple_pairings(const RootSystem& rs, const RationalVector& x) {
  RationalVector a(rs.rank(), Rational(0));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) a[i] += x[j] * rs.gram()[j][i];
  return a;
}

Rational root_pairing(const RootSystem& rs, const RationalVector& a, int g) {
  Rational s(0);
  const auto& c = rs.root(g);
  for (int j = 0; j < rs.rank(); ++j) s += c[j] * a[j];
  return s;
}

}  // namespace

RootSet region_pattern(const RootSystem& rs, const RationalVector& x) {
  const RationalVector a = simple_pairings(rs, x);
  RootSet out;
  for (int g = 0; g < rs.num_positive(); ++g)
    if (root_pairing(rs, a, g) > Rational(1)) out.set(g);
  return out;
}

bool in_region(const Ideal& ideal, const RationalVector& x) {
  const RootSystem& rs = ideal.system();
  const RationalVector a = simple_pairings(rs, x);
  for (const auto& v : a)
    if (v <= Rational(0)) return false;
  for (int g = 0; g < rs.num_positive(); ++g) {
    const Rational s = root_pairing(rs, a, g);
    if (ideal.contains(g) ? !(s > Rational(1)) : !(s < Rational(1))) return false;
  }
  return true;
}

namespace {

using Key = std::pair<RationalVector, Rational>;

// Scales so the first nonzero coefficient has absolute value 1.
Key normalized(const StrictInequality& q) {
  for (const auto& c : q.coeffs) {
    if (c != 0) {
      const Rational s = abs(c);
      RationalVector v = q.coeffs;
      for (auto& x : v) x /= s;
      return {v, q.constant / s};
    }
  }
  return {q.coeffs, q.constant};
}

// Returns false on a constant constraint that fails.
bool insert(std::map<Key, bool>& into, const StrictInequality& q) {
  Key k = normalized(q);
  bool all_zero = true;
  for (const auto& c : k.first) all_zero = all_zero && c == 0;
  if (all_zero) return k.second > Rational(0);
  into.emplace(std::move(k), true);
  return true;
}

}  // namespace

std::optional<RationalVector> solve_strict(const std::vector<StrictInequality>& system, int num_vars) {
  // stages[k] involves only variables 0..k-1.
  std::vector<std::vector<StrictInequality>> stages(num_vars + 1);
  {
    std::map<Key, bool> unique;
    for (const auto& q : system) {
      if (static_cast<int>(q.coeffs.size()) != num_vars) throw std::invalid_argument("solve_strict: wrong width");
      if (!insert(unique, q)) return std::nullopt;
    }
    for (const auto& [k, _] : unique) stages[num_vars].push_back({k.first, k.second});
  }
  for (int k = num_vars - 1; k >= 0; --k) {
    std::map<Key, bool> unique;
    std::vector<const StrictInequality*> pos, neg;
    for (const auto& q : stages[k + 1]) {
      if (q.coeffs[k] > Rational(0)) pos.push_back(&q);
      else if (q.coeffs[k] < Rational(0)) neg.push_back(&q);
      else if (!insert(unique, q)) return std::nullopt;
    }
    for (const auto* lo : pos) {
      for (const auto* hi : neg) {
        const Rational a = lo->coeffs[k], b = -hi->coeffs[k];
        StrictInequality q{RationalVector(num_vars, Rational(0)), lo->constant * b + hi->constant * a};
        for (int j = 0; j < num_vars; ++j) q.coeffs[j] = lo->coeffs[j] * b + hi->coeffs[j] * a;
        q.coeffs[k] = 0;
        if (!insert(unique, q)) return std::nullopt;
      }
    }
    for (const auto& [key, _] : unique) stages[k].push_back({key.first, key.second});
  }
  RationalVector x(num_vars, Rational(0));
  for (int k = 0; k < num_vars; ++k) {
    std::optional<Rational> lower, upper;
    for (const auto& q : stages[k + 1]) {
      const Rational c = q.coeffs[k];
      if (c == 0) continue;
      Rational rest = q.constant;
      for (int j = 0; j < k; ++j) rest += q.coeffs[j] * x[j];
      const Rational bound = -rest / c;
      if (c > Rational(0)) {
        if (!lower || bound > *lower) lower = bound;
      } else if (!upper || bound < *upper) {
        upper = bound;
      }
    }
    if (lower && upper) x[k] = (*lower + *upper) / 2;
    else if (lower) x[k] = *lower + 1;
    else if (upper) x[k] = *upper - 1;
  }
  for (const auto& q : system) {
    Rational s = q.constant;
    for (int j = 0; j < num_vars; ++j) s += q.coeffs[j] * x[j];
    if (!(s > Rational(0))) throw InternalError("solve_strict: back substitution violated a constraint");
  }
  return x;
}

RegionWitness region_witness(const Ideal& ideal) {
  const RootSystem& rs = ideal.system();
  const int p = rs.rank();
  RationalVector x0 = rs.rho_covector();
  for (auto& c : x0) c /= rs.coxeter_number();

  const AffineWeylElement w = admissible_element(ideal);
  RationalVector candidate = w.inverse().affine_apply(x0);
  if (in_region(ideal, candidate)) return {candidate, WitnessMethod::kInverseAlcoveImage};
  candidate = w.affine_apply(x0);
  if (in_region(ideal, candidate)) return {candidate, WitnessMethod::kAlcoveImage};

  // Variables a_i = (x, alpha_i), so x = sum a_i pi_i.
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
  if (!a) throw InternalError("region_witness: no point found for an ideal of " + rs.name());
  RationalVector x(p, Rational(0));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) x[j] += (*a)[i] * rs.fundamental_coweight(i)[j];
  if (!in_region(ideal, x)) throw InternalError("region_witness: eliminated point fails verification");
  return {x, WitnessMethod::kFourierMotzkin};
}

}  // namespace adnil
