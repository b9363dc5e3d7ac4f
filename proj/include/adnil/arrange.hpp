#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adnil/ideals.hpp"
#include "adnil/rational.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

/// chi(t) = prod_i (t - h - e_i), kept in factored form.
class CharPoly {
 public:
  explicit CharPoly(std::vector<std::int64_t> roots) : roots_(std::move(roots)) {}

  const std::vector<std::int64_t>& roots() const { return roots_; }
  int degree() const { return static_cast<int>(roots_.size()); }
  Rational operator()(const Rational& t) const;
  /// Coefficients, constant term first.
  std::vector<std::int64_t> expanded() const;

 private:
  std::vector<std::int64_t> roots_;
};

/// Characteristic polynomial of the Catalan arrangement.
CharPoly char_poly(const RootSystem& rs);

struct ZaslavskyCounts {
  std::int64_t regions = 0;           // (-1)^p chi(-1)
  std::int64_t bounded = 0;           // |chi(1)|
  std::int64_t dominant_regions = 0;  // regions / |W|
  std::int64_t dominant_bounded = 0;  // bounded / |W|
};
/// Throws InternalError if a division by |W| is not exact.
ZaslavskyCounts zaslavsky_counts(const RootSystem& rs);

/// R_I is bounded iff I contains no simple root.
bool is_bounded_region(const Ideal& ideal);

/// True iff (x, alpha) > 0 for all simple alpha and, for every positive
/// gamma, (x, gamma) > 1 when gamma is in I and (x, gamma) < 1 otherwise.
bool in_region(const Ideal& ideal, const RationalVector& x);

/// Sign pattern {gamma : (x, gamma) > 1}.
RootSet region_pattern(const RootSystem& rs, const RationalVector& x);

enum class WitnessMethod { kAlcoveImage, kInverseAlcoveImage, kFourierMotzkin };

struct RegionWitness {
  RationalVector point;  // simple-root coordinates
  WitnessMethod method = WitnessMethod::kAlcoveImage;
};

/// A point of R_I, verified with in_region before returning. Tries the
/// images of rho^vee / h under w<I> and its inverse, then falls back to exact
/// Fourier-Motzkin elimination. Throws InternalError if nothing works.
RegionWitness region_witness(const Ideal& ideal);

/// Strict system sum_j coeffs[j] x_j + constant > 0.
struct StrictInequality {
  RationalVector coeffs;
  Rational constant;
};
/// A solution of a system of strict linear inequalities, if one exists.
std::optional<RationalVector> solve_strict(const std::vector<StrictInequality>& system, int num_vars);

}  // namespace adnil
