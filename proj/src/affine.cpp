#include "adnil/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "adnil/error.hpp"

namespace adnil {

AffineRoot affine_simple_root(const RootSystem& rs, int i) {
  if (i == 0) return {rs.negate(rs.highest_root_index()), 1};
  return {i - 1, 0};
}

std::optional<int> affine_simple_index(const RootSystem& rs, const AffineRoot& a) {
  if (a.level == 0 && rs.is_positive_id(a.root) && rs.is_simple(a.root)) return a.root + 1;
  if (a.level == 1 && a.root == rs.negate(rs.highest_root_index())) return 0;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

AffineWeylElement::AffineWeylElement(const RootSystem& rs, std::vector<int> perm, std::vector<int> r)
    : rs_(&rs), perm_(std::move(perm)), r_(std::move(r)) {
  for (int g = 0; g < rs.num_positive(); ++g) {
    int c = pair_with_translation(g) + (rs.is_positive_id(perm_[g]) ? 0 : 1);
    length_ += std::abs(c);
  }
}

AffineWeylElement AffineWeylElement::identity(const RootSystem& rs) {
  std::vector<int> perm(rs.num_roots());
  for (int s = 0; s < rs.num_roots(); ++s) perm[s] = s;
  return AffineWeylElement(rs, std::move(perm), std::vector<int>(rs.rank(), 0));
}

AffineWeylElement AffineWeylElement::theta_reflection(const RootSystem& rs) {
  std::vector<int> perm(rs.num_roots());
  for (int s = 0; s < rs.num_roots(); ++s) perm[s] = rs.reflect_theta(s);
  return AffineWeylElement(rs, std::move(perm), std::vector<int>(rs.rank(), 0));
}

AffineWeylElement AffineWeylElement::simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine simple reflection index out of range");
  if (i == 0) {
    // s_0 = s_theta * t_{-theta^vee}.
    std::vector<int> r = rs.coroot_coords(rs.highest_root_index());
    for (int& c : r) c = -c;
    return theta_reflection(rs) * translation(rs, r);
  }
  std::vector<int> perm(rs.num_roots());
  for (int s = 0; s < rs.num_roots(); ++s) perm[s] = rs.reflect(i - 1, s);
  return AffineWeylElement(rs, std::move(perm), std::vector<int>(rs.rank(), 0));
}

AffineWeylElement AffineWeylElement::from_simple_images(const RootSystem& rs,
                                                        const std::vector<AffineRoot>& images) {
  const int p = rs.rank();
  if (static_cast<int>(images.size()) != p) throw std::invalid_argument("from_simple_images: need one image per simple root");
  // w(alpha_j) = v(alpha_j) - (alpha_j, r) delta and (alpha_j, r) = sum_i r_i <alpha_j, alpha_i^vee>.
  const RationalMatrix& minv = rs.cartan_inverse();
  std::vector<int> r(p);
  for (int i = 0; i < p; ++i) {
    Rational c(0);
    for (int j = 0; j < p; ++j) c += minv[i][j] * -images[j].level;
    auto ci = as_integer(c);
    if (!ci) throw std::invalid_argument("from_simple_images: translation is not in the coroot lattice");
    r[i] = static_cast<int>(*ci);
  }
  std::vector<int> perm(rs.num_roots());
  std::vector<RootVector> columns;
  for (const auto& a : images) columns.push_back(rs.signed_root(a.root));
  std::vector<bool> hit(rs.num_roots(), false);
  for (int s = 0; s < rs.num_roots(); ++s) {
    const RootVector gamma = rs.signed_root(s);
    RootVector out(p, 0);
    for (int j = 0; j < p; ++j)
      if (gamma[j] != 0)
        for (int k = 0; k < p; ++k) out[k] += gamma[j] * columns[j][k];
    auto id = rs.signed_index_of(out);
    if (!id || hit[*id]) throw std::invalid_argument("from_simple_images: images do not come from the Weyl group");
    hit[*id] = true;
    perm[s] = *id;
  }
  return AffineWeylElement(rs, std::move(perm), std::move(r));
}

AffineWeylElement AffineWeylElement::translation(const RootSystem& rs, std::vector<int> coroot_coords) {
  if (static_cast<int>(coroot_coords.size()) != rs.rank()) throw std::invalid_argument("translation: wrong dimension");
  std::vector<int> perm(rs.num_roots());
  for (int s = 0; s < rs.num_roots(); ++s) perm[s] = s;
  return AffineWeylElement(rs, std::move(perm), std::move(coroot_coords));
}

int AffineWeylElement::pair_with_translation(int id) const {
  int s = 0;
  for (int i = 0; i < rs_->rank(); ++i) s += r_[i] * rs_->coroot_pairing(id, i);
  return s;
}

std::vector<int> AffineWeylElement::finite_on_coroots(const std::vector<int>& c, const std::vector<int>& perm) const {
  std::vector<int> out(rs_->rank(), 0);
  for (int i = 0; i < rs_->rank(); ++i) {
    if (c[i] == 0) continue;
    const auto& image = rs_->coroot_coords(perm[i]);
    for (int j = 0; j < rs_->rank(); ++j) out[j] += c[i] * image[j];
  }
  return out;
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& rhs) const {
  if (rs_ != rhs.rs_) throw std::invalid_argument("multiplying elements of different affine Weyl groups");
  // (v1 t_r1)(v2 t_r2) = v1 v2 t_{v2^{-1}(r1) + r2}
  const int n = rs_->num_roots();
  std::vector<int> perm(n), rhs_inv(n);
  for (int s = 0; s < n; ++s) {
    perm[s] = perm_[rhs.perm_[s]];
    rhs_inv[rhs.perm_[s]] = s;
  }
  std::vector<int> r = finite_on_coroots(r_, rhs_inv);
  for (int i = 0; i < rs_->rank(); ++i) r[i] += rhs.r_[i];
  return AffineWeylElement(*rs_, std::move(perm), std::move(r));
}

AffineWeylElement AffineWeylElement::inverse() const {
  // (v t_r)^{-1} = v^{-1} t_{-v(r)}
  const int n = rs_->num_roots();
  std::vector<int> inv(n);
  for (int s = 0; s < n; ++s) inv[perm_[s]] = s;
  std::vector<int> r = finite_on_coroots(r_, perm_);
  for (int& c : r) c = -c;
  return AffineWeylElement(*rs_, std::move(inv), std::move(r));
}

AffineRoot AffineWeylElement::apply(const AffineRoot& a) const {
  return {perm_[a.root], a.level - pair_with_translation(a.root)};
}

std::vector<std::vector<int>> AffineWeylElement::finite_matrix() const {
  const int p = rs_->rank();
  std::vector<std::vector<int>> m(p, std::vector<int>(p, 0));
  for (int j = 0; j < p; ++j) {
    RootVector image = rs_->signed_root(perm_[j]);
    for (int i = 0; i < p; ++i) m[i][j] = image[i];
  }
  return m;
}

std::vector<std::vector<int>> AffineWeylElement::finite_inverse_matrix() const { return inverse().finite_matrix(); }

std::pair<RationalVector, Rational> AffineWeylElement::apply(const RationalVector& x, const Rational& delta_coeff) const {
  const int p = rs_->rank();
  auto m = finite_matrix();
  RationalVector image(p, Rational(0));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) image[i] += m[i][j] * x[j];
  Rational pairing(0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) pairing += r_[i] * x[j] * rs_->cartan(j, i);
  return {image, delta_coeff - pairing};
}

RationalVector AffineWeylElement::affine_apply(const RationalVector& y) const {
  RationalVector shifted = translation_vector();
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += y[i];
  return apply(shifted, Rational(0)).first;
}

std::vector<AffineRoot> AffineWeylElement::inversion_set() const {
  std::vector<AffineRoot> out;
  for (int s = 0; s < rs_->num_roots(); ++s) {
    const int c = pair_with_translation(s);
    const int kmin = rs_->is_positive_id(s) ? 0 : 1;
    for (int k = kmin; k < c; ++k) out.push_back({s, k});
    if (c >= kmin && !rs_->is_positive_id(perm_[s])) out.push_back({s, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::vector<AffineRoot> phi_set(const Ideal& ideal) {
  const RootSystem& rs = ideal.system();
  std::vector<AffineRoot> phi;
  auto series = lower_central_series(ideal);
  for (std::size_t k = 0; k < series.size(); ++k) {
    series[k].members().for_each([&](int g) { phi.push_back({rs.negate(g), static_cast<int>(k) + 1}); });
  }
  std::sort(phi.begin(), phi.end());
  return phi;
}

AffineWeylElement element_from_inversions(const RootSystem& rs, std::vector<AffineRoot> phi) {
  // Peel w <- w s_i for an affine simple alpha_i in N(w). With u the product
  // of the reflections peeled so far, the residual inversion set is
  // {beta > 0 : u(beta) in phi}, so only the images u(alpha_j) are tracked;
  // they change linearly: (u s_i)(alpha_j) = u(alpha_j) - <alpha_j, alpha_i^vee> u(alpha_i).
  std::sort(phi.begin(), phi.end());
  const int p = rs.rank();
  std::vector<int> finite_ids(p + 1);
  std::vector<std::vector<int>> cartan(p + 1, std::vector<int>(p + 1));
  for (int j = 0; j <= p; ++j) finite_ids[j] = affine_simple_root(rs, j).root;
  for (int j = 0; j <= p; ++j)
    for (int i = 0; i <= p; ++i)
      cartan[j][i] = i == 0 ? -rs.theta_pairing(finite_ids[j]) : rs.coroot_pairing(finite_ids[j], i - 1);

  // u(alpha_j) = image[j] + level[j] delta; the update is the reflection of
  // the finite part in the finite part of u(alpha_i).
  std::vector<int> image = finite_ids;
  std::vector<int> level(p + 1);
  for (int j = 0; j <= p; ++j) level[j] = affine_simple_root(rs, j).level;
  for (std::size_t step = 0; step < phi.size(); ++step) {
    int pick = -1;
    for (int j = 0; j <= p && pick < 0; ++j)
      if (std::binary_search(phi.begin(), phi.end(), AffineRoot{image[j], level[j]})) pick = j;
    if (pick < 0) {
      throw InternalError("not biclosed: residual set of " + std::to_string(phi.size() - step) +
                          " affine roots contains no affine simple root");
    }
    const int base = image[pick];
    const int base_level = level[pick];
    for (int j = 0; j <= p; ++j) {
      const int a = cartan[j][pick];
      if (a == 0) continue;
      image[j] = rs.reflect_in(base, image[j]);
      level[j] -= a * base_level;
    }
  }
  // Now u = w^{-1}.
  std::vector<AffineRoot> simple_images;
  for (int j = 1; j <= p; ++j) simple_images.push_back({image[j], level[j]});
  AffineWeylElement w = AffineWeylElement::from_simple_images(rs, simple_images).inverse();
  if (static_cast<std::size_t>(w.length()) != phi.size())
    throw InternalError("not biclosed: recovered element has length " + std::to_string(w.length()));
  return w;
}

AffineWeylElement admissible_element(const Ideal& ideal) {
  return element_from_inversions(ideal.system(), phi_set(ideal));
}

Ideal ideal_of(const AffineWeylElement& w) {
  const RootSystem& rs = w.system();
  RootSet members;
  for (int g = 0; g < rs.num_positive(); ++g)
    if (!w.apply({rs.negate(g), 1}).is_positive(rs)) members.set(g);
  return Ideal(rs, members);
}

bool is_admissible(const AffineWeylElement& w) {
  const RootSystem& rs = w.system();
  for (int i = 0; i < rs.rank(); ++i)
    if (!w.apply({i, 0}).is_positive(rs)) return false;
  AffineWeylElement inv = w.inverse();
  for (int j = 0; j <= rs.rank(); ++j) {
    AffineRoot b = inv.apply(affine_simple_root(rs, j));
    if (b.is_positive(rs)) continue;
    if (b.level != -1 || !rs.is_positive_id(b.root)) return false;
  }
  return true;
}

bool generator_criterion(const AffineWeylElement& w, int gamma) {
  const RootSystem& rs = w.system();
  if (gamma < 0 || gamma >= rs.num_positive()) throw std::invalid_argument("generator_criterion: bad root index");
  AffineRoot image = w.apply({rs.negate(gamma), 1});
  if (image.is_positive(rs)) throw std::invalid_argument("generator_criterion: root is not in the ideal of w");
  return affine_simple_index(rs, image.negated(rs)).has_value();
}

int inverse_descent_count(const AffineWeylElement& w) {
  const RootSystem& rs = w.system();
  AffineWeylElement inv = w.inverse();
  int count = 0;
  for (int j = 0; j <= rs.rank(); ++j)
    if (!inv.apply(affine_simple_root(rs, j)).is_positive(rs)) ++count;
  return count;
}

namespace {

bool ideal_of_w_is_empty(const AffineWeylElement& w) {
  // Every nonempty ideal contains theta.
  const RootSystem& rs = w.system();
  return w.apply({rs.negate(rs.highest_root_index()), 1}).is_positive(rs);
}

}  // namespace

int class_criterion(const AffineWeylElement& w) {
  const RootSystem& rs = w.system();
  if (ideal_of_w_is_empty(w)) return 0;
  AffineRoot a = w.apply(affine_simple_root(rs, 0));
  return rs.is_positive_id(a.root) ? -a.level : 1 - a.level;
}

ClassBranch class_criterion_branch(const AffineWeylElement& w) {
  const RootSystem& rs = w.system();
  if (ideal_of_w_is_empty(w)) return ClassBranch::kEmptyIdeal;
  AffineRoot a = w.apply(affine_simple_root(rs, 0));
  return rs.is_positive_id(a.root) ? ClassBranch::kPositiveRoot : ClassBranch::kDeltaMinusPositive;
}

LatticePoint d_point(const AffineWeylElement& w) {
  if (!is_admissible(w)) throw std::invalid_argument("d_point: element is not admissible");
  const RootSystem& rs = w.system();
  AffineWeylElement inv = w.inverse();
  // w^{-1} = v^{-1} t_{-v(r)}, so v(r) is minus the translation part of w^{-1}.
  std::vector<int> c = inv.translation_coroot_coords();
  for (int& x : c) x = -x;
  return {rs.coroot_to_root_coords(c)};
}

namespace {

Rational pair_simple(const RootSystem& rs, const RationalVector& x, int i) {
  Rational s(0);
  for (int j = 0; j < rs.rank(); ++j) s += x[j] * rs.gram()[j][i];
  return s;
}

Rational pair_theta(const RootSystem& rs, const RationalVector& x) {
  Rational s(0);
  for (int i = 0; i < rs.rank(); ++i) s += rs.marks()[i] * pair_simple(rs, x, i);
  return s;
}

}  // namespace

bool simplex_contains(const RootSystem& rs, const LatticePoint& d) {
  for (int i = 0; i < rs.rank(); ++i)
    if (pair_simple(rs, d.coords, i) < -1) return false;
  return pair_theta(rs, d.coords) <= 2;
}

int simplex_face_codim(const RootSystem& rs, const LatticePoint& d) {
  int codim = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (pair_simple(rs, d.coords, i) == -1) ++codim;
  if (pair_theta(rs, d.coords) == 2) ++codim;
  return codim;
}

std::vector<LatticePoint> simplex_vertices(const RootSystem& rs) {
  const int p = rs.rank();
  RationalVector base(p);
  for (int j = 0; j < p; ++j) base[j] = -rs.rho_covector()[j];
  std::vector<LatticePoint> out{{base}};
  for (int i = 0; i < p; ++i) {
    Rational scale(rs.coxeter_number() + 1, rs.marks()[i]);
    RationalVector v = base;
    for (int j = 0; j < p; ++j) v[j] += scale * rs.fundamental_coweight(i)[j];
    out.push_back({v});
  }
  return out;
}

std::vector<LatticePoint> lattice_points_in_simplex(const RootSystem& rs) {
  // Search over a_i = (tau, alpha_i), integral on the coroot lattice:
  // a_i >= -1 and sum m_i a_i <= 2, i.e. b_i = a_i + 1 >= 0 with
  // sum m_i b_i <= h + 1. The box per coordinate is the vertex range.
  const int p = rs.rank();
  const int budget = rs.coxeter_number() + 1;
  std::vector<LatticePoint> out;
  std::vector<int> b(p, 0);
  std::function<void(int, int)> search = [&](int i, int left) {
    if (i == p) {
      RationalVector tau(p, Rational(0));
      for (int k = 0; k < p; ++k)
        for (int j = 0; j < p; ++j) tau[j] += (b[k] - 1) * rs.fundamental_coweight(k)[j];
      LatticePoint pt{tau};
      if (pt.in_coroot_lattice(rs)) out.push_back(pt);
      return;
    }
    for (int v = 0; v * rs.marks()[i] <= left; ++v) {
      b[i] = v;
      search(i + 1, left - v * rs.marks()[i]);
    }
  };
  search(0, budget);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace adnil
