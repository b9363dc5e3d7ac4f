#include "adnil/rootsys.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "adnil/error.hpp"
#include "adnil/root_set.hpp"

namespace adnil {

LieType parse_lie_type(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return LieType::A;
      case 'B': case 'b': return LieType::B;
      case 'C': case 'c': return LieType::C;
      case 'D': case 'd': return LieType::D;
      case 'E': case 'e': return LieType::E;
      case 'F': case 'f': return LieType::F;
      case 'G': case 'g': return LieType::G;
      default: break;
    }
  }
  throw std::invalid_argument("unknown root system type '" + std::string(text) + "'");
}

namespace {

// Four bits per coordinate; roots of supported systems have |c| <= 6 and
// rank <= 15.
std::optional<std::uint64_t> pack(const RootVector& v) {
  if (v.size() > 16) return std::nullopt;
  std::uint64_t key = 0;
  for (int c : v) {
    if (c < -7 || c > 7) return std::nullopt;
    key = (key << 4) | static_cast<std::uint64_t>(c + 8);
  }
  return key;
}

struct DynkinData {
  std::vector<Rational> lengths;             // (alpha_i, alpha_i)
  std::vector<std::pair<int, int>> bonds;    // 0-based
  std::vector<int> exponents;
  int coxeter = 0;
};

void check_type_rank(LieType t, int p) {
  bool ok = false;
  switch (t) {
    case LieType::A: ok = p >= 1; break;
    case LieType::B:
    case LieType::C: ok = p >= 2; break;
    case LieType::D: ok = p >= 3; break;
    case LieType::E: ok = p >= 6 && p <= 8; break;
    case LieType::F: ok = p == 4; break;
    case LieType::G: ok = p == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument(std::string("invalid root system ") + type_letter(t) + std::to_string(p) +
                                ": need A p>=1, B/C p>=2, D p>=3, E 6-8, F 4 or G 2");
  }
}

std::vector<int> odd_exponents(int count) {
  std::vector<int> e(count);
  for (int i = 0; i < count; ++i) e[i] = 2 * i + 1;
  return e;
}

DynkinData dynkin(LieType t, int p) {
  DynkinData d;
  d.lengths.assign(p, Rational(2));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (t) {
    case LieType::A:
      chain(p);
      for (int i = 1; i <= p; ++i) d.exponents.push_back(i);
      d.coxeter = p + 1;
      break;
    case LieType::B:
      chain(p);
      d.lengths[p - 1] = 1;
      d.exponents = odd_exponents(p);
      d.coxeter = 2 * p;
      break;
    case LieType::C:
      chain(p);
      for (int i = 0; i + 1 < p; ++i) d.lengths[i] = 1;
      d.exponents = odd_exponents(p);
      d.coxeter = 2 * p;
      break;
    case LieType::D:
      chain(p - 1);
      d.bonds.emplace_back(p - 3, p - 1);
      d.exponents = odd_exponents(p - 1);
      d.exponents.push_back(p - 1);
      std::sort(d.exponents.begin(), d.exponents.end());
      d.coxeter = 2 * p - 2;
      break;
    case LieType::E:
      d.bonds = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < p; ++i) d.bonds.emplace_back(i, i + 1);
      if (p == 6) {
        d.exponents = {1, 4, 5, 7, 8, 11};
        d.coxeter = 12;
      } else if (p == 7) {
        d.exponents = {1, 5, 7, 9, 11, 13, 17};
        d.coxeter = 18;
      } else {
        d.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
        d.coxeter = 30;
      }
      break;
    case LieType::F:
      chain(4);
      d.lengths[2] = d.lengths[3] = 1;
      d.exponents = {1, 5, 7, 11};
      d.coxeter = 12;
      break;
    case LieType::G:
      chain(2);
      d.lengths[0] = Rational(2, 3);
      d.exponents = {1, 5};
      d.coxeter = 6;
      break;
  }
  return d;
}

int to_int(const Rational& q, const char* what) {
  auto v = as_integer(q);
  if (!v) throw InternalError(std::string("expected an integer for ") + what);
  return static_cast<int>(*v);
}

}  // namespace

RootSystem RootSystem::build(LieType type, int rank) {
  check_type_rank(type, rank);
  const int p = rank;
  DynkinData dd = dynkin(type, p);

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = p;
  rs.exponents_ = dd.exponents;

  rs.gram_.assign(p, RationalVector(p, Rational(0)));
  for (int i = 0; i < p; ++i) rs.gram_[i][i] = dd.lengths[i];
  for (auto [i, j] : dd.bonds) {
    // Adjacent simple roots pair to minus half the longer squared length.
    Rational v = -std::max(dd.lengths[i], dd.lengths[j]) / 2;
    rs.gram_[i][j] = rs.gram_[j][i] = v;
  }
  rs.cartan_.assign(p, std::vector<int>(p, 0));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) rs.cartan_[i][j] = to_int(2 * rs.gram_[i][j] / rs.gram_[j][j], "Cartan entry");

  // Positive roots by alpha_i-strings, processed in order of height.
  std::vector<RootVector> roots;
  std::map<RootVector, int> known;
  for (int i = 0; i < p; ++i) {
    RootVector v(p, 0);
    v[i] = 1;
    known.emplace(v, static_cast<int>(roots.size()));
    roots.push_back(v);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const RootVector beta = roots[k];
    for (int i = 0; i < p; ++i) {
      int down = 0;
      RootVector probe = beta;
      while (true) {
        probe[i] -= 1;
        if (!known.count(probe)) break;
        ++down;
      }
      int pairing = 0;
      for (int j = 0; j < p; ++j) pairing += beta[j] * rs.cartan_[j][i];
      if (down - pairing > 0) {
        RootVector up = beta;
        up[i] += 1;
        if (!known.count(up)) {
          known.emplace(up, static_cast<int>(roots.size()));
          roots.push_back(up);
        }
      }
    }
    if (roots.size() > static_cast<std::size_t>(RootSet::kCapacity)) {
      throw std::invalid_argument("root system " + std::string(1, type_letter(type)) + std::to_string(p) +
                                  " has more than " + std::to_string(RootSet::kCapacity) + " positive roots");
    }
  }
  auto height_of = [](const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(roots.begin(), roots.end(), [&](const RootVector& a, const RootVector& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.roots_ = roots;
  const int n = static_cast<int>(roots.size());
  for (const auto& r : roots) rs.heights_.push_back(height_of(r));
  for (int i = 0; i < n; ++i) {
    rs.lookup_.emplace(*pack(roots[i]), i);
    RootVector neg = roots[i];
    for (int& c : neg) c = -c;
    rs.lookup_.emplace(*pack(neg), n + i);
  }

  rs.coxeter_ = rs.heights_.back() + 1;
  if (rs.coxeter_ != dd.coxeter) throw InternalError("Coxeter number disagrees with the highest root");
  if (2 * n != p * rs.coxeter_) throw InternalError("|positive roots| != p h / 2");
  if (std::accumulate(rs.exponents_.begin(), rs.exponents_.end(), 0) != n)
    throw InternalError("exponents do not sum to the number of positive roots");

  rs.sum_table_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      RootVector s(p);
      for (int j = 0; j < p; ++j) s[j] = roots[a][j] + roots[b][j];
      if (int id = rs.find_id(s); id >= 0) rs.sum_table_[a * n + b] = id;
    }
  }
  rs.splittings_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (int id = rs.sum_table_[a * n + b]; id >= 0) rs.splittings_[id].push_back({a, b});

  RationalMatrix ginv = invert(rs.gram_);
  rs.coweights_.assign(p, RationalVector(p, Rational(0)));
  rs.rho_covector_.assign(p, Rational(0));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      rs.coweights_[i][j] = ginv[i][j];
      rs.rho_covector_[j] += ginv[i][j];
    }
  }

  const int total = 2 * n;
  rs.pairing_.assign(static_cast<std::size_t>(total) * p, 0);
  rs.theta_pairing_.assign(total, 0);
  rs.coroots_.assign(total, std::vector<int>(p, 0));
  for (int id = 0; id < total; ++id) {
    RootVector g = rs.signed_root(id);
    for (int i = 0; i < p; ++i) {
      int s = 0;
      for (int j = 0; j < p; ++j) s += g[j] * rs.cartan_[j][i];
      rs.pairing_[id * p + i] = s;
    }
    rs.theta_pairing_[id] = to_int(rs.inner(g, roots.back()), "(gamma, theta)");
    Rational len = rs.inner(g, g);
    for (int j = 0; j < p; ++j) rs.coroots_[id][j] = to_int(g[j] * rs.gram_[j][j] / len, "coroot coordinate");
  }

  auto lookup_or_throw = [&](const RootVector& v) {
    const int id = rs.find_id(v);
    if (id < 0) throw InternalError("reflection left the root system");
    return id;
  };
  rs.reflect_.assign(p, std::vector<int>(total));
  rs.reflect_theta_.assign(total, 0);
  for (int id = 0; id < total; ++id) {
    RootVector g = rs.signed_root(id);
    for (int i = 0; i < p; ++i) {
      RootVector r = g;
      r[i] -= rs.coroot_pairing(id, i);
      rs.reflect_[i][id] = lookup_or_throw(r);
    }
    RootVector r = g;
    for (int j = 0; j < p; ++j) r[j] -= rs.theta_pairing_[id] * roots.back()[j];
    rs.reflect_theta_[id] = lookup_or_throw(r);
  }
  rs.reflect_in_.assign(static_cast<std::size_t>(n) * total, 0);
  for (int beta = 0; beta < n; ++beta) {
    for (int id = 0; id < total; ++id) {
      int c = 0;  // <gamma, beta^vee>
      for (int i = 0; i < p; ++i) c += rs.coroots_[beta][i] * rs.coroot_pairing(id, i);
      RootVector r = rs.signed_root(id);
      for (int j = 0; j < p; ++j) r[j] -= c * roots[beta][j];
      rs.reflect_in_[static_cast<std::size_t>(beta) * total + id] = lookup_or_throw(r);
    }
  }
  RationalMatrix m(p, RationalVector(p));
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < p; ++i) m[j][i] = rs.cartan_[j][i];
  rs.cartan_inverse_ = invert(m);
  return rs;
}

std::string RootSystem::name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

std::optional<int> RootSystem::index_of(const RootVector& v) const {
  const int id = find_id(v);
  if (id < 0 || !is_positive_id(id)) return std::nullopt;
  return id;
}

RootVector RootSystem::signed_root(int id) const {
  if (is_positive_id(id)) return roots_.at(id);
  RootVector v = roots_.at(id - num_positive());
  for (int& c : v) c = -c;
  return v;
}

int RootSystem::find_id(const RootVector& v) const {
  if (static_cast<int>(v.size()) != rank_) return -1;
  auto key = pack(v);
  if (!key) return -1;
  auto it = lookup_.find(*key);
  return it == lookup_.end() ? -1 : it->second;
}

std::optional<int> RootSystem::signed_index_of(const RootVector& v) const {
  const int id = find_id(v);
  if (id < 0) return std::nullopt;
  return id;
}

Rational RootSystem::inner(const RationalVector& x, const RationalVector& y) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

Rational RootSystem::inner(const RootVector& x, const RootVector& y) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += gram_[i][j] * (x[i] * y[j]);
  }
  return s;
}

std::int64_t RootSystem::weyl_group_order() const {
  std::int64_t w = 1;
  for (int e : exponents_) w *= e + 1;
  return w;
}

RationalVector RootSystem::coroot_to_root_coords(const std::vector<int>& c) const {
  RationalVector x(rank_);
  for (int i = 0; i < rank_; ++i) x[i] = Rational(2 * c[i]) / gram_[i][i];
  return x;
}

RationalVector RootSystem::coroot_to_root_coords(const RationalVector& c) const {
  RationalVector x(rank_);
  for (int i = 0; i < rank_; ++i) x[i] = 2 * c[i] / gram_[i][i];
  return x;
}

std::optional<std::vector<int>> RootSystem::root_to_coroot_coords(const RationalVector& x) const {
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) {
    auto v = as_integer(x[i] * gram_[i][i] / 2);
    if (!v) return std::nullopt;
    c[i] = static_cast<int>(*v);
  }
  return c;
}

const RootSystem& root_system(LieType type, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::unique_ptr<const RootSystem>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(type_letter(type), rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<const RootSystem>(RootSystem::build(type, rank))).first;
  return *it->second;
}

}  // namespace adnil
