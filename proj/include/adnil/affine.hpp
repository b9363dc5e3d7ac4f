#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "adnil/ideals.hpp"
#include "adnil/rational.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

/// The affine root gamma + level * delta; `root` is a signed root id of the
/// finite system (see RootSystem).
struct AffineRoot {
  int root = 0;
  int level = 0;

  RootVector finite_part(const RootSystem& rs) const { return rs.signed_root(root); }
  bool is_positive(const RootSystem& rs) const { return level > 0 || (level == 0 && rs.is_positive_id(root)); }
  AffineRoot negated(const RootSystem& rs) const { return {rs.negate(root), -level}; }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// Affine simple roots: index 0 is alpha_0 = delta - theta, index i >= 1 is alpha_i.
AffineRoot affine_simple_root(const RootSystem& rs, int i);
/// Index of the affine simple root equal to `a`, if any.
std::optional<int> affine_simple_index(const RootSystem& rs, const AffineRoot& a);

/// w = v * t_r: v a finite Weyl group element, stored as the signed
/// permutation it induces on the roots, and r in the coroot lattice, stored
/// in the coroot basis. Acts linearly on V + Q delta by
///   w(x) = v(x) - (x, r) delta,   w(delta) = delta.
class AffineWeylElement {
 public:
  static AffineWeylElement identity(const RootSystem& rs);
  /// s_0 for i = 0, else the finite reflection s_i.
  static AffineWeylElement simple_reflection(const RootSystem& rs, int i);
  static AffineWeylElement translation(const RootSystem& rs, std::vector<int> coroot_coords);
  /// The finite reflection s_theta.
  static AffineWeylElement theta_reflection(const RootSystem& rs);
  /// The element with w(alpha_j) = images[j] for the finite simple roots.
  /// Throws std::invalid_argument unless the images extend to a permutation
  /// of the roots with a coroot-lattice translation part.
  static AffineWeylElement from_simple_images(const RootSystem& rs, const std::vector<AffineRoot>& images);

  const RootSystem& system() const { return *rs_; }

  AffineWeylElement operator*(const AffineWeylElement& rhs) const;
  AffineWeylElement inverse() const;

  AffineRoot apply(const AffineRoot& a) const;
  /// Linear action on x + c delta, x in simple-root coordinates.
  std::pair<RationalVector, Rational> apply(const RationalVector& x, const Rational& delta_coeff) const;
  /// Affine action on V: w o y = v(y + r).
  RationalVector affine_apply(const RationalVector& y) const;

  /// Image of gamma (signed root id) under the finite part.
  int finite_image(int id) const { return perm_[id]; }
  /// Matrix of v in the simple-root basis; column j is v(alpha_j).
  std::vector<std::vector<int>> finite_matrix() const;
  /// Matrix of v^{-1}.
  std::vector<std::vector<int>> finite_inverse_matrix() const;
  const std::vector<int>& translation_coroot_coords() const { return r_; }
  RationalVector translation_vector() const { return rs_->coroot_to_root_coords(r_); }

  /// Computed from sum over positive gamma of |(gamma, r) + [v(gamma) < 0]|.
  int length() const { return length_; }
  std::vector<AffineRoot> inversion_set() const;

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.rs_ == b.rs_ && a.perm_ == b.perm_ && a.r_ == b.r_;
  }

 private:
  AffineWeylElement(const RootSystem& rs, std::vector<int> perm, std::vector<int> r);
  /// (gamma, r) for a signed root id.
  int pair_with_translation(int id) const;
  /// v acting on coroot-basis coordinates.
  std::vector<int> finite_on_coroots(const std::vector<int>& c, const std::vector<int>& perm) const;

  const RootSystem* rs_;
  std::vector<int> perm_;
  std::vector<int> r_;
  int length_ = 0;
};

/// Rational point of V in simple-root coordinates.
struct LatticePoint {
  RationalVector coords;

  bool in_coroot_lattice(const RootSystem& rs) const { return rs.root_to_coroot_coords(coords).has_value(); }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.coords < b.coords; }
};

/// {k delta - gamma : gamma in I_k, k = 1..cl(I)}, sorted.
std::vector<AffineRoot> phi_set(const Ideal& ideal);

/// The unique w with inversion set `phi`, by peeling affine simple roots.
/// Throws InternalError ("not biclosed") when no simple root is left to peel.
AffineWeylElement element_from_inversions(const RootSystem& rs, std::vector<AffineRoot> phi);

/// w<I>.
AffineWeylElement admissible_element(const Ideal& ideal);

/// I_w = {gamma > 0 : delta - gamma in N(w)}.
Ideal ideal_of(const AffineWeylElement& w);

bool is_admissible(const AffineWeylElement& w);

/// True iff w(delta - gamma) is minus an affine simple root. Throws
/// std::invalid_argument if gamma is not in I_w.
bool generator_criterion(const AffineWeylElement& w, int gamma);

/// #{alpha in affine simple roots : w^{-1}(alpha) < 0}.
int inverse_descent_count(const AffineWeylElement& w);

enum class ClassBranch { kEmptyIdeal, kPositiveRoot, kDeltaMinusPositive };

/// The unique k with w(alpha_0) + (k-1) delta < 0 < w(alpha_0) + k delta,
/// or 0 for the empty ideal.
int class_criterion(const AffineWeylElement& w);
/// Whether w(alpha_0) + k delta lands in Delta+ or in delta - Delta+.
ClassBranch class_criterion_branch(const AffineWeylElement& w);

/// d_w = v(r). Throws std::invalid_argument for a non-admissible element.
LatticePoint d_point(const AffineWeylElement& w);

/// (d, alpha) >= -1 for simple alpha and (d, theta) <= 2.
bool simplex_contains(const RootSystem& rs, const LatticePoint& d);
/// Number of tight constraints among the p + 1 facets.
int simplex_face_codim(const RootSystem& rs, const LatticePoint& d);
/// -rho^vee first, then -rho^vee + (h + 1) / m_i pi_i for i = 1..p.
std::vector<LatticePoint> simplex_vertices(const RootSystem& rs);
/// All coroot-lattice points of the simplex, sorted.
std::vector<LatticePoint> lattice_points_in_simplex(const RootSystem& rs);

}  // namespace adnil
