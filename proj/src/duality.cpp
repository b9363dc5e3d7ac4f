#include "adnil/duality.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "adnil/error.hpp"

namespace adnil {

namespace {

bool increasing(const std::vector<int>& v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k - 1] >= v[k]) return false;
  return true;
}

void require_type(const RootSystem& rs, std::initializer_list<LieType> types, const char* what) {
  if (std::find(types.begin(), types.end(), rs.type()) == types.end())
    throw std::invalid_argument(std::string(what) + ": not defined for " + rs.name());
}

std::vector<int> complement_shifted(const std::vector<int>& set, int lo, int hi, int shift) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    if (!std::binary_search(set.begin(), set.end(), v)) out.push_back(v + shift);
  return out;
}

std::string label(const RootVector& v) {
  std::string s;
  for (int c : v) s += std::to_string(c);
  return s;
}

}  // namespace

bool TypeACoords::valid() const {
  if (n < 2 || x.size() != y.size() || !increasing(x) || !increasing(y)) return false;
  for (std::size_t l = 0; l < x.size(); ++l)
    if (x[l] < 1 || y[l] > n || x[l] >= y[l]) return false;
  return true;
}

bool TypeCCoords::valid() const {
  if (p < 1) return false;
  for (std::size_t l = 0; l < boxes.size(); ++l) {
    auto [i, j] = boxes[l];
    if (i < 1 || i >= j || i + j > 2 * p + 1) return false;
    if (l > 0 && (boxes[l - 1].first >= i || boxes[l - 1].second >= j)) return false;
  }
  return true;
}

std::pair<int, int> root_pair_A(const RootSystem& rs, int root) {
  require_type(rs, {LieType::A}, "root_pair_A");
  const RootVector& c = rs.root(root);
  int first = -1, last = -1;
  for (int k = 0; k < rs.rank(); ++k) {
    if (c[k] == 0) continue;
    if (first < 0) first = k;
    last = k;
  }
  return {first + 1, last + 2};
}

int root_index_A(const RootSystem& rs, int i, int j) {
  require_type(rs, {LieType::A}, "root_index_A");
  if (i < 1 || j > rs.rank() + 1 || i >= j) throw std::invalid_argument("root_index_A: bad pair");
  RootVector v(rs.rank(), 0);
  for (int k = i - 1; k <= j - 2; ++k) v[k] = 1;
  return *rs.index_of(v);
}

TypeACoords coords_A(const Ideal& ideal) {
  const RootSystem& rs = ideal.system();
  TypeACoords c{rs.rank() + 1, {}, {}};
  std::vector<std::pair<int, int>> pairs;
  const Antichain gens = generators(ideal);
  for (int g : gens.roots()) pairs.push_back(root_pair_A(rs, g));
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) {
    c.x.push_back(i);
    c.y.push_back(j);
  }
  return c;
}

Ideal ideal_from_coords_A(const RootSystem& rs, const TypeACoords& c) {
  require_type(rs, {LieType::A}, "ideal_from_coords_A");
  if (c.n != rs.rank() + 1 || !c.valid()) throw std::invalid_argument("ideal_from_coords_A: invalid coordinates");
  std::vector<int> roots;
  for (std::size_t l = 0; l < c.x.size(); ++l) roots.push_back(root_index_A(rs, c.x[l], c.y[l]));
  return up_closure(rs, roots);
}

TypeACoords dual_A(const TypeACoords& c) {
  if (!c.valid()) throw std::invalid_argument("dual_A: invalid coordinates");
  TypeACoords d{c.n, complement_shifted(c.y, 2, c.n, -1), complement_shifted(c.x, 1, c.n - 1, 1)};
  if (!d.valid()) throw InternalError("dual_A produced invalid coordinates");
  return d;
}

std::vector<TypeACoords> self_dual_ideals_A(int n) {
  if (n < 2) throw std::invalid_argument("self_dual_ideals_A: need n >= 2");
  const RootSystem& rs = root_system(LieType::A, n - 1);
  std::vector<TypeACoords> out;
  for (const auto& ideal : enumerate_ideals(rs)) {
    TypeACoords c = coords_A(ideal);
    if (dual_A(c) == c) out.push_back(c);
  }
  return out;
}

RootVector shifted_box_root(LieType type, int p, int i, int j) {
  if (type != LieType::B && type != LieType::C) throw std::invalid_argument("shifted_box_root: type must be B or C");
  if (i < 1 || i >= j || i + j > 2 * p + 1) throw std::invalid_argument("shifted_box_root: box outside the diagram");
  RootVector v(p, 0);
  auto add = [&](int from, int to, int by) {
    for (int k = from; k <= to; ++k) v[k - 1] += by;
  };
  if (j <= p) {
    add(i, j - 1, 1);  // e_i - e_j
  } else if (type == LieType::C) {
    const int k = 2 * p + 1 - j;  // e_i + e_k, or 2e_i when k = i
    add(i, p - 1, 1);
    add(k, p - 1, 1);
    v[p - 1] = 1;
  } else if (j == p + 1) {
    add(i, p, 1);  // e_i
  } else {
    const int k = 2 * p + 2 - j;  // e_i + e_k, k > i
    add(i, p - 1, 1);
    add(k, p - 1, 1);
    v[p - 1] = 2;
  }
  return v;
}

std::pair<int, int> root_box(const RootSystem& rs, int root) {
  require_type(rs, {LieType::B, LieType::C}, "root_box");
  const int p = rs.rank();
  const RootVector& target = rs.root(root);
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; i + j <= 2 * p + 1; ++j)
      if (shifted_box_root(rs.type(), p, i, j) == target) return {i, j};
  throw InternalError("root_box: root of " + rs.name() + " has no box");
}

TypeCCoords coords_BC(const Ideal& ideal) {
  const RootSystem& rs = ideal.system();
  TypeCCoords c{rs.rank(), {}};
  const Antichain gens = generators(ideal);
  for (int g : gens.roots()) c.boxes.push_back(root_box(rs, g));
  std::sort(c.boxes.begin(), c.boxes.end());
  return c;
}

Ideal ideal_from_coords_BC(const RootSystem& rs, const TypeCCoords& c) {
  require_type(rs, {LieType::B, LieType::C}, "ideal_from_coords_BC");
  if (c.p != rs.rank() || !c.valid()) throw std::invalid_argument("ideal_from_coords_BC: invalid coordinates");
  std::vector<int> roots;
  for (auto [i, j] : c.boxes) roots.push_back(*rs.index_of(shifted_box_root(rs.type(), rs.rank(), i, j)));
  return up_closure(rs, roots);
}

TypeCCoords dual_C(const TypeCCoords& c) {
  if (!c.valid()) throw std::invalid_argument("dual_C: invalid coordinates");
  const int p = c.p;
  const int mirror = 2 * p + 1;
  TypeACoords unfolded{2 * p, {}, {}};
  for (auto [i, j] : c.boxes) {
    unfolded.x.push_back(i);
    unfolded.y.push_back(j);
  }
  const std::size_t k = c.boxes.size();
  for (std::size_t l = k; l-- > 0;) {
    unfolded.x.push_back(mirror - c.boxes[l].second);
    unfolded.y.push_back(mirror - c.boxes[l].first);
  }
  if (k > 0 && c.boxes[k - 1].first + c.boxes[k - 1].second == mirror) {
    unfolded.x.erase(unfolded.x.begin() + static_cast<std::ptrdiff_t>(k));
    unfolded.y.erase(unfolded.y.begin() + static_cast<std::ptrdiff_t>(k));
  }
  const TypeACoords d = dual_A(unfolded);
  std::set<std::pair<int, int>> pairs;
  for (std::size_t l = 0; l < d.x.size(); ++l) pairs.insert({d.x[l], d.y[l]});
  TypeCCoords out{p, {}};
  for (auto [x, y] : pairs) {
    if (!pairs.count({mirror - y, mirror - x})) throw InternalError("dual_C: dual diagram is not self-conjugate");
    if (x + y <= mirror) out.boxes.push_back({x, y});
  }
  if (!out.valid()) throw InternalError("dual_C produced invalid coordinates");
  return out;
}

TypeCCoords dual_B(const TypeCCoords& c) { return dual_C(c); }

bool has_duality(LieType type, int rank) {
  switch (type) {
    case LieType::A: return rank >= 1;
    case LieType::B:
    case LieType::C: return rank >= 2;
    case LieType::G: return rank == 2;
    default: return false;
  }
}

const std::vector<std::pair<std::vector<RootVector>, std::vector<RootVector>>>& g2_duality_table() {
  static const std::vector<std::pair<std::vector<RootVector>, std::vector<RootVector>>> table = {
      {{}, {{1, 0}, {0, 1}}},
      {{{1, 0}}, {{0, 1}}},
      {{{1, 1}}, {{3, 2}}},
      {{{2, 1}}, {{3, 1}}},
  };
  return table;
}

namespace {

Antichain dual_G2(const RootSystem& rs, const Antichain& gamma) {
  std::vector<RootVector> key;
  for (int g : gamma.roots()) key.push_back(rs.root(g));
  std::sort(key.begin(), key.end());
  auto to_antichain = [&](const std::vector<RootVector>& vs) {
    std::vector<int> roots;
    for (const auto& v : vs) roots.push_back(*rs.index_of(v));
    return Antichain(rs, roots);
  };
  for (auto [a, b] : g2_duality_table()) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == key) return to_antichain(b);
    if (b == key) return to_antichain(a);
  }
  throw InternalError("G2 duality table is missing " + describe(rs, gamma));
}

}  // namespace

Antichain dual(const RootSystem& rs, const Antichain& gamma) {
  if (!has_duality(rs.type(), rs.rank()))
    throw UnsupportedError("no duality implemented for type " + std::string(1, type_letter(rs.type())));
  switch (rs.type()) {
    case LieType::A: {
      const Ideal d = ideal_from_coords_A(rs, dual_A(coords_A(up_closure(rs, gamma))));
      return generators(d);
    }
    case LieType::B:
    case LieType::C: {
      const TypeCCoords c = coords_BC(up_closure(rs, gamma));
      const TypeCCoords d = rs.type() == LieType::B ? dual_B(c) : dual_C(c);
      return generators(ideal_from_coords_BC(rs, d));
    }
    default:
      return dual_G2(rs, gamma);
  }
}

Ideal dual(const Ideal& ideal) {
  const RootSystem& rs = ideal.system();
  return up_closure(rs, dual(rs, generators(ideal)));
}

namespace {

bool supported_on(const RootVector& v, std::span<const int> simple_subset) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0 && std::find(simple_subset.begin(), simple_subset.end(), static_cast<int>(k)) == simple_subset.end())
      return false;
  return true;
}

struct Component {
  LieType type;
  std::vector<int> order;  // ambient simple indices in the component's numbering
};

std::vector<std::vector<int>> connected_components(const RootSystem& rs, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(rs.rank(), false);
  for (int start : nodes) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int other : nodes)
        if (!seen[other] && rs.adjacent(comp[k], other)) {
          seen[other] = true;
          comp.push_back(other);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

Component identify(const RootSystem& rs, const std::vector<int>& comp) {
  const int m = static_cast<int>(comp.size());
  if (m == rs.rank()) return {rs.type(), comp};
  if (m == 1) return {LieType::A, comp};
  switch (rs.type()) {
    case LieType::A: return {LieType::A, comp};
    case LieType::B:
    case LieType::C:
      return {comp.back() == rs.rank() - 1 ? rs.type() : LieType::A, comp};
    default: break;
  }
  // Simply-laced path: A_m ordered from one end.
  std::vector<int> degree(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!rs.adjacent(comp[a], comp[b])) continue;
      if (rs.cartan(comp[a], comp[b]) != -1 || rs.cartan(comp[b], comp[a]) != -1)
        throw UnsupportedError("no duality implemented for a multiply-laced subsystem of " + rs.name());
      ++degree[a];
    }
  int end = -1;
  for (int a = 0; a < m; ++a) {
    if (degree[a] > 2) throw UnsupportedError("no duality implemented for a branched subsystem of " + rs.name());
    if (degree[a] == 1 && end < 0) end = a;
  }
  std::vector<int> order{comp[end]};
  while (static_cast<int>(order.size()) < m) {
    for (int node : comp) {
      if (rs.adjacent(order.back(), node) && (order.size() < 2 || node != order[order.size() - 2])) {
        order.push_back(node);
        break;
      }
    }
  }
  return {LieType::A, order};
}

}  // namespace

Antichain dual_in_subsystem(const RootSystem& rs, std::span<const int> simple_subset, const Antichain& gamma) {
  for (int g : gamma.roots())
    if (!supported_on(rs.root(g), simple_subset))
      throw std::invalid_argument("dual_in_subsystem: " + label(rs.root(g)) + " is outside the subsystem");
  std::vector<int> result;
  for (const auto& comp : connected_components(rs, {simple_subset.begin(), simple_subset.end()})) {
    const Component c = identify(rs, comp);
    const int m = static_cast<int>(c.order.size());
    const RootSystem& sub = root_system(c.type, m);
    std::vector<int> local;
    for (int g : gamma.roots()) {
      if (!supported_on(rs.root(g), comp)) continue;
      RootVector v(m);
      for (int t = 0; t < m; ++t) v[t] = rs.root(g)[c.order[t]];
      local.push_back(*sub.index_of(v));
    }
    const Antichain sub_dual = dual(sub, Antichain(sub, local));
    for (int g : sub_dual.roots()) {
      RootVector v(rs.rank(), 0);
      for (int t = 0; t < m; ++t) v[c.order[t]] = sub.root(g)[t];
      result.push_back(*rs.index_of(v));
    }
  }
  return Antichain(rs, result);
}

std::string describe(const RootSystem& rs, const Antichain& gamma) {
  std::string s = "{";
  for (std::size_t k = 0; k < gamma.roots().size(); ++k) {
    if (k) s += ", ";
    s += label(rs.root(gamma.roots()[k]));
  }
  return s + "}";
}

namespace {

std::vector<Antichain> all_antichains(const RootSystem& rs) {
  std::vector<Antichain> out;
  for (const auto& ideal : enumerate_ideals(rs)) out.push_back(generators(ideal));
  return out;
}

std::vector<int> without(int p, int skip) {
  std::vector<int> out;
  for (int i = 0; i < p; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

std::pair<int, int> long_short(const RootSystem& rs, const Antichain& a) {
  int lng = 0;
  for (int g : a.roots()) lng += rs.is_long(g) ? 1 : 0;
  return {lng, a.size() - lng};
}

Antichain with_root(const RootSystem& rs, const Antichain& a, int root) {
  std::vector<int> v = a.roots();
  v.push_back(root);
  return Antichain(rs, v);
}

Antichain without_root(const RootSystem& rs, const Antichain& a, int root) {
  std::vector<int> v;
  for (int g : a.roots())
    if (g != root) v.push_back(g);
  return Antichain(rs, v);
}

bool inside(const RootSystem& rs, const Antichain& a, std::span<const int> subset) {
  for (int g : a.roots())
    if (!supported_on(rs.root(g), subset)) return false;
  return true;
}

// The value forced on gamma by the simple-root removal/addition rules, if any.
std::optional<Antichain> forced_dual(const RootSystem& rs, const Antichain& gamma, bool& conflict) {
  std::optional<Antichain> forced;
  conflict = false;
  for (int a = 0; a < rs.rank(); ++a) {
    const std::vector<int> rest = without(rs.rank(), a);
    std::optional<Antichain> value;
    if (gamma.contains(a)) value = dual_in_subsystem(rs, rest, without_root(rs, gamma, a));
    else if (inside(rs, gamma, rest)) value = with_root(rs, dual_in_subsystem(rs, rest, gamma), a);
    if (!value) continue;
    if (forced && !(*forced == *value)) conflict = true;
    forced = value;
  }
  return forced;
}

}  // namespace

ConjectureReport conjecture_properties_check(const RootSystem& rs, const DualityMap& dual_fn) {
  ConjectureReport report;
  const int p = rs.rank();
  auto note = [&](bool& flag, const std::string& message) {
    flag = false;
    if (report.violations.size() < 20) report.violations.push_back(message);
  };
  std::pair<int, int> simple_split{0, 0};
  for (int i = 0; i < p; ++i) (rs.is_long(i) ? simple_split.first : simple_split.second)++;

  for (const Antichain& gamma : all_antichains(rs)) {
    ++report.antichains;
    const Antichain star = dual_fn(gamma);
    const std::string name = describe(rs, gamma);
    if (star == gamma) ++report.fixed_points;
    if (!(dual_fn(star) == gamma)) note(report.involution, "not an involution at " + name);
    if (gamma.size() + star.size() != p) note(report.generator_pairing, "sizes do not add up to rank at " + name);
    auto [l1, s1] = long_short(rs, gamma);
    auto [l2, s2] = long_short(rs, star);
    if (std::pair{l1 + l2, s1 + s2} != simple_split) note(report.long_short, "long/short split differs at " + name);
    for (int a = 0; a < p; ++a) {
      const std::vector<int> rest = without(p, a);
      if (gamma.contains(a)) {
        if (!inside(rs, star, rest) || !(star == dual_in_subsystem(rs, rest, without_root(rs, gamma, a))))
          note(report.simple_removal, "simple-root removal fails at " + name);
      } else if (inside(rs, gamma, rest)) {
        if (!(star == with_root(rs, dual_in_subsystem(rs, rest, gamma), a)))
          note(report.simple_addition, "simple-root addition fails at " + name);
      }
    }
  }
  const int h = rs.coxeter_number();
  for (int k = 1; k <= h; ++k) {
    const Antichain lhs(rs, roots_of_height(rs, k));
    const Antichain rhs(rs, roots_of_height(rs, h + 1 - k));
    if (!(dual_fn(lhs) == rhs)) note(report.height_antichains, "height " + std::to_string(k) + " antichain");
  }
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    std::vector<int> in, out;
    for (int i = 0; i < p; ++i) ((mask >> i) & 1u ? in : out).push_back(i);
    if (!(dual_fn(Antichain(rs, in)) == Antichain(rs, out)))
      note(report.simple_subsets, "simple subset " + describe(rs, Antichain(rs, in)));
  }
  return report;
}

std::vector<std::map<Antichain, Antichain>> find_dualities(const RootSystem& rs, std::size_t limit) {
  const std::vector<Antichain> antichains = all_antichains(rs);
  const int n = static_cast<int>(antichains.size());
  const int p = rs.rank();
  const int h = rs.coxeter_number();
  std::map<Antichain, int> index;
  for (int k = 0; k < n; ++k) index[antichains[k]] = k;
  std::pair<int, int> simple_split{0, 0};
  for (int i = 0; i < p; ++i) (rs.is_long(i) ? simple_split.first : simple_split.second)++;

  std::vector<std::vector<int>> candidates(n);
  for (int k = 0; k < n; ++k) {
    const Antichain& gamma = antichains[k];
    bool conflict = false;
    std::optional<Antichain> forced = forced_dual(rs, gamma, conflict);
    if (conflict) return {};
    for (int hk = 1; hk <= h; ++hk) {
      if (gamma == Antichain(rs, roots_of_height(rs, hk))) {
        Antichain target(rs, roots_of_height(rs, h + 1 - hk));
        if (forced && !(*forced == target)) return {};
        forced = target;
      }
    }
    auto [l1, s1] = long_short(rs, gamma);
    for (int c = 0; c < n; ++c) {
      const Antichain& star = antichains[c];
      if (forced && !(star == *forced)) continue;
      auto [l2, s2] = long_short(rs, star);
      if (gamma.size() + star.size() != p || std::pair{l1 + l2, s1 + s2} != simple_split) continue;
      candidates[k].push_back(c);
    }
  }

  std::vector<std::map<Antichain, Antichain>> solutions;
  std::vector<int> image(n, -1);
  std::function<void(int)> search = [&](int k) {
    if (solutions.size() >= limit) return;
    while (k < n && image[k] >= 0) ++k;
    if (k == n) {
      std::map<Antichain, Antichain> m;
      for (int t = 0; t < n; ++t) m.emplace(antichains[t], antichains[image[t]]);
      solutions.push_back(std::move(m));
      return;
    }
    for (int c : candidates[k]) {
      if (image[c] >= 0 && c != k) continue;
      if (std::find(candidates[c].begin(), candidates[c].end(), k) == candidates[c].end()) continue;
      image[k] = c;
      image[c] = k;
      search(k + 1);
      image[c] = -1;
      image[k] = -1;
    }
  };
  search(0);
  return solutions;
}

}  // namespace adnil
