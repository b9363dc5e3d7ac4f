#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "adnil/affine.hpp"
#include "adnil/error.hpp"
#include "oracles.hpp"

using namespace adnil;

namespace {

const std::vector<std::pair<LieType, int>> kSystems = {
    {LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3},
    {LieType::D, 4}, {LieType::G, 2}, {LieType::F, 4}, {LieType::B, 4},
};

int root_id(const RootSystem& rs, RootVector v) { return *rs.signed_index_of(v); }

// All positive affine roots gamma + k delta with 0 <= k <= max_level.
std::vector<AffineRoot> positive_affine_roots(const RootSystem& rs, int max_level) {
  std::vector<AffineRoot> out;
  for (int k = 0; k <= max_level; ++k)
    for (int id = 0; id < rs.num_roots(); ++id) {
      AffineRoot a{id, k};
      if (a.is_positive(rs)) out.push_back(a);
    }
  return out;
}

std::vector<AffineRoot> brute_inversions(const AffineWeylElement& w, int max_level) {
  std::vector<AffineRoot> out;
  for (const auto& a : positive_affine_roots(w.system(), max_level))
    if (!w.apply(a).is_positive(w.system())) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

// Q^vee cap D by searching the box spanned by the vertices in coroot coordinates.
std::set<RationalVector> box_lattice_points(const RootSystem& rs) {
  const int p = rs.rank();
  const auto cm = oracle::cartan_matrix(rs.type(), p);
  const auto verts = simplex_vertices(rs);
  std::vector<int> lo(p, 1 << 20), hi(p, -(1 << 20));
  for (const auto& v : verts) {
    for (int j = 0; j < p; ++j) {
      const Rational c = v.coords[j] * rs.gram()[j][j] / 2;
      lo[j] = std::min<int>(lo[j], static_cast<int>(std::floor(boost::rational_cast<double>(c))));
      hi[j] = std::max<int>(hi[j], static_cast<int>(std::ceil(boost::rational_cast<double>(c))));
    }
  }
  std::set<RationalVector> out;
  std::vector<int> c = lo;
  while (true) {
    bool ok = true;
    int theta_pair = 0;
    for (int i = 0; i < p; ++i) {
      int pair = 0;
      for (int j = 0; j < p; ++j) pair += c[j] * cm[i][j];
      if (pair < -1) ok = false;
      theta_pair += rs.marks()[i] * pair;
    }
    if (ok && theta_pair <= 2) {
      RationalVector x(p);
      for (int j = 0; j < p; ++j) x[j] = Rational(2 * c[j]) / rs.gram()[j][j];
      out.insert(x);
    }
    int k = 0;
    for (; k < p && c[k] == hi[k]; ++k) c[k] = lo[k];
    if (k == p) break;
    ++c[k];
  }
  return out;
}

}  // namespace

TEST_CASE("A2 phi sets") {
  const RootSystem& rs = root_system(LieType::A, 2);
  const int theta = rs.highest_root_index();
  CHECK(phi_set(make_ideal_unchecked(rs, RootSet{})).empty());
  const Ideal top = up_closure(rs, std::vector<int>{theta});
  CHECK(phi_set(top) == std::vector<AffineRoot>{{rs.negate(theta), 1}});
  const Ideal heis = heisenberg_ideal(rs);
  CHECK(heis.size() == 3);
  const std::vector<AffineRoot> expected = {{rs.negate(0), 1}, {rs.negate(1), 1}, {rs.negate(theta), 1},
                                            {rs.negate(theta), 2}};
  auto got = phi_set(heis);
  std::sort(got.begin(), got.end());
  auto want = expected;
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("A2 elements: s_0, identity, Heisenberg translation") {
  const RootSystem& rs = root_system(LieType::A, 2);
  const int theta = rs.highest_root_index();
  CHECK(element_from_inversions(rs, {}) == AffineWeylElement::identity(rs));
  const auto s0 = element_from_inversions(rs, {{rs.negate(theta), 1}});
  CHECK(s0 == AffineWeylElement::simple_reflection(rs, 0));
  CHECK(s0.length() == 1);
  const auto w = admissible_element(heisenberg_ideal(rs));
  CHECK(w == AffineWeylElement::theta_reflection(rs) * AffineWeylElement::simple_reflection(rs, 0));
  CHECK(w == AffineWeylElement::translation(rs, {-1, -1}));
  CHECK(w.length() == 4);
  CHECK(is_admissible(AffineWeylElement::identity(rs)));
  CHECK_FALSE(is_admissible(AffineWeylElement::simple_reflection(rs, 1)));
  CHECK_FALSE(is_admissible(AffineWeylElement::simple_reflection(rs, 2)));
}

TEST_CASE("simple reflections act as reflections") {
  for (auto [t, p] : kSystems) {
    const RootSystem& rs = root_system(t, p);
    for (int i = 0; i <= p; ++i) {
      const auto s = AffineWeylElement::simple_reflection(rs, i);
      CHECK(s * s == AffineWeylElement::identity(rs));
      CHECK(s.length() == 1);
      const AffineRoot ai = affine_simple_root(rs, i);
      CHECK(s.apply(ai) == ai.negated(rs));
      CHECK(affine_simple_index(rs, ai) == i);
    }
  }
}

TEST_CASE("group laws and action compatibility") {
  const RootSystem& rs = root_system(LieType::C, 3);
  std::vector<AffineWeylElement> words;
  AffineWeylElement w = AffineWeylElement::identity(rs);
  const int pattern[] = {0, 1, 2, 3, 2, 0, 1, 0, 3, 2, 1};
  for (int i : pattern) {
    w = w * AffineWeylElement::simple_reflection(rs, i);
    words.push_back(w);
  }
  for (const auto& a : words) {
    CHECK(a * a.inverse() == AffineWeylElement::identity(rs));
    for (const auto& b : words) {
      for (const auto& root : positive_affine_roots(rs, 2)) CHECK((a * b).apply(root) == a.apply(b.apply(root)));
    }
    for (const auto& root : positive_affine_roots(rs, 2)) {
      RationalVector x(rs.rank());
      const RootVector v = root.finite_part(rs);
      for (int k = 0; k < rs.rank(); ++k) x[k] = v[k];
      const auto [img, c] = a.apply(x, Rational(root.level));
      const AffineRoot direct = a.apply(root);
      const RootVector dv = direct.finite_part(rs);
      for (int k = 0; k < rs.rank(); ++k) CHECK(img[k] == Rational(dv[k]));
      CHECK(c == Rational(direct.level));
    }
    const auto inv = a.inversion_set();
    CHECK(static_cast<int>(inv.size()) == a.length());
    CHECK(inv == brute_inversions(a, 3 * rs.coxeter_number()));
  }
}

TEST_CASE("from_simple_images reconstructs elements") {
  const RootSystem& rs = root_system(LieType::G, 2);
  AffineWeylElement w = AffineWeylElement::identity(rs);
  for (int i : {1, 0, 2, 1, 0, 2, 0}) {
    w = AffineWeylElement::simple_reflection(rs, i) * w;
    std::vector<AffineRoot> images;
    for (int j = 1; j <= rs.rank(); ++j) images.push_back(w.apply(affine_simple_root(rs, j)));
    CHECK(AffineWeylElement::from_simple_images(rs, images) == w);
  }
  CHECK_THROWS_AS(AffineWeylElement::from_simple_images(rs, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(AffineWeylElement::from_simple_images(rs, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("admissible elements: round trip, length, criteria") {
  for (auto [t, p] : kSystems) {
    CAPTURE(type_letter(t));
    CAPTURE(p);
    const RootSystem& rs = root_system(t, p);
    std::set<std::vector<int>> seen_perm;
    for (const auto& ideal : enumerate_ideals(rs)) {
      const auto phi = phi_set(ideal);
      const auto w = admissible_element(ideal);
      CHECK(w.inversion_set() == phi);
      int expected_len = 0;
      for (const auto& term : lower_central_series(ideal)) expected_len += term.size();
      CHECK(w.length() == expected_len);
      CHECK(is_admissible(w));
      CHECK(ideal_of(w) == ideal);
      const Antichain g = generators(ideal);
      ideal.members().for_each([&](int r) { CHECK(generator_criterion(w, r) == g.contains(r)); });
      CHECK(inverse_descent_count(w) == g.size());
      CHECK(class_criterion(w) == class_of_nilpotence(ideal));
      for (int id = 0; id < rs.num_roots(); ++id) {
        const int image = w.finite_image(id);
        CHECK(w.finite_image(rs.negate(id)) == rs.negate(image));
      }
    }
  }
}

TEST_CASE("generator criterion rejects roots outside the ideal") {
  const RootSystem& rs = root_system(LieType::B, 3);
  const Ideal heis = heisenberg_ideal(rs);
  const auto w = admissible_element(heis);
  for (int r = 0; r < rs.num_positive(); ++r) {
    if (!heis.contains(r)) CHECK_THROWS_AS(generator_criterion(w, r), std::invalid_argument);
  }
  const int theta = rs.highest_root_index();
  CHECK_FALSE(generator_criterion(w, theta));
  for (int i = 0; i < rs.rank(); ++i)
    if (heis.contains(i)) CHECK(generator_criterion(w, i));
}

TEST_CASE("Heisenberg element and class branches") {
  for (auto [t, p] : kSystems) {
    if (p < 2) continue;
    const RootSystem& rs = root_system(t, p);
    const int theta = rs.highest_root_index();
    const auto w = admissible_element(heisenberg_ideal(rs));
    std::vector<int> minus_theta = rs.coroot_coords(theta);
    for (int& c : minus_theta) c = -c;
    CHECK(w == AffineWeylElement::translation(rs, minus_theta));
    CHECK(w == AffineWeylElement::theta_reflection(rs) * AffineWeylElement::simple_reflection(rs, 0));
    CHECK(class_criterion(w) == 2);
    AffineRoot a = w.apply(affine_simple_root(rs, 0));
    a.level += 2;
    CHECK(a == AffineRoot{rs.negate(theta), 1});
    const auto d = d_point(w);
    CHECK(d.coords == rs.coroot_to_root_coords(minus_theta));

    const auto top = admissible_element(up_closure(rs, std::vector<int>{theta}));
    CHECK(class_criterion(top) == 1);
    CHECK(class_criterion_branch(top) == ClassBranch::kPositiveRoot);
  }
  const RootSystem& rs = root_system(LieType::A, 3);
  CHECK(class_criterion(AffineWeylElement::identity(rs)) == 0);
  CHECK(class_criterion_branch(AffineWeylElement::identity(rs)) == ClassBranch::kEmptyIdeal);
}

TEST_CASE("d points: consistency identity and rejection") {
  const RootSystem& rs = root_system(LieType::C, 3);
  for (const auto& ideal : enumerate_ideals(rs)) {
    const auto w = admissible_element(ideal);
    const auto d = d_point(w);
    const auto winv = w.inverse();
    const auto vinv = winv.finite_matrix();
    for (int id = 0; id < rs.num_roots(); ++id) {
      const AffineRoot img = winv.apply(AffineRoot{id, 0});
      RationalVector x(rs.rank());
      const RootVector v = rs.signed_root(id);
      for (int k = 0; k < rs.rank(); ++k) x[k] = v[k];
      CHECK(Rational(img.level) == rs.inner(x, d.coords));
      const RootVector fin = img.finite_part(rs);
      for (int k = 0; k < rs.rank(); ++k) {
        int s = 0;
        for (int j = 0; j < rs.rank(); ++j) s += vinv[k][j] * v[j];
        CHECK(fin[k] == s);
      }
    }
  }
  CHECK(d_point(AffineWeylElement::identity(rs)).coords == RationalVector(rs.rank(), Rational(0)));
  CHECK_THROWS_AS(d_point(AffineWeylElement::simple_reflection(rs, 1)), std::invalid_argument);
}

TEST_CASE("simplex vertices") {
  const RootSystem& a2 = root_system(LieType::A, 2);
  const auto v = simplex_vertices(a2);
  REQUIRE(v.size() == 3);
  CHECK(v[0].coords == RationalVector{Rational(-1), Rational(-1)});
  CHECK(v[1].coords == RationalVector{Rational(5, 3), Rational(1, 3)});
  CHECK(v[2].coords == RationalVector{Rational(1, 3), Rational(5, 3)});
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E, LieType::F, LieType::G}) {
    for (int p = 1; p <= 8; ++p) {
      try {
        RootSystem::build(t, p);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const RootSystem& rs = root_system(t, p);
      int integral = 0;
      LatticePoint found;
      for (const auto& x : simplex_vertices(rs)) {
        CHECK(simplex_contains(rs, x));
        if (x.in_coroot_lattice(rs)) {
          ++integral;
          found = x;
        }
      }
      CHECK(integral == 1);
      if (p <= 6) {
        const auto all = enumerate_ideals(rs);
        CHECK(d_point(admissible_element(all.back())) == found);
        CHECK(simplex_face_codim(rs, found) == p);
      }
    }
  }
}

TEST_CASE("lattice points agree with the coroot box search and the d points") {
  for (auto [t, p] : kSystems) {
    CAPTURE(type_letter(t));
    CAPTURE(p);
    const RootSystem& rs = root_system(t, p);
    const auto points = lattice_points_in_simplex(rs);
    std::set<RationalVector> got;
    for (const auto& x : points) got.insert(x.coords);
    CHECK(got == box_lattice_points(rs));
    const auto ideals = enumerate_ideals(rs);
    CHECK(points.size() == ideals.size());
    std::set<RationalVector> ds;
    for (const auto& ideal : ideals) {
      const auto d = d_point(admissible_element(ideal));
      CHECK(d.in_coroot_lattice(rs));
      CHECK(simplex_contains(rs, d));
      CHECK(simplex_face_codim(rs, d) == gen(ideal));
      ds.insert(d.coords);
    }
    CHECK(ds == got);
  }
  CHECK(lattice_points_in_simplex(root_system(LieType::A, 2)).size() == 5);
  CHECK(lattice_points_in_simplex(root_system(LieType::G, 2)).size() == 8);
  CHECK(lattice_points_in_simplex(root_system(LieType::F, 4)).size() == 105);
  const RootSystem& rs = root_system(LieType::A, 2);
  CHECK(simplex_face_codim(rs, LatticePoint{{Rational(0), Rational(0)}}) == 0);
  CHECK_FALSE(simplex_contains(rs, LatticePoint{{Rational(-2), Rational(0)}}));
}

TEST_CASE("peeling rejects sets that are not inversion sets") {
  const RootSystem& rs = root_system(LieType::A, 2);
  CHECK_THROWS_AS(element_from_inversions(rs, {{rs.negate(0), 2}}), InternalError);
}
