#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adnil/ideals.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

/// Generators of an sl_n ideal as southwest corners (i_l, j_l): the root
/// alpha_i + ... + alpha_{j-1} is the pair (i, j).
struct TypeACoords {
  int n = 2;
  std::vector<int> x;  // increasing, in [1, n-1]
  std::vector<int> y;  // increasing, in [2, n]

  bool valid() const;
  friend bool operator==(const TypeACoords&, const TypeACoords&) = default;
  friend auto operator<=>(const TypeACoords&, const TypeACoords&) = default;
};

/// Generators of an sp_2p or so_{2p+1} ideal as boxes (i, j) of the shifted
/// diagram, 1 <= i < j, i + j <= 2p + 1, both coordinates increasing.
struct TypeCCoords {
  int p = 2;
  std::vector<std::pair<int, int>> boxes;

  bool valid() const;
  friend bool operator==(const TypeCCoords&, const TypeCCoords&) = default;
  friend auto operator<=>(const TypeCCoords&, const TypeCCoords&) = default;
};

/// (i, j) for a positive root of A_{n-1}, and back.
std::pair<int, int> root_pair_A(const RootSystem& rs, int root);
int root_index_A(const RootSystem& rs, int i, int j);

TypeACoords coords_A(const Ideal& ideal);
Ideal ideal_from_coords_A(const RootSystem& rs, const TypeACoords& c);

/// X* = ({2..n} \ Y) - 1, Y* = ({1..n-1} \ X) + 1.
TypeACoords dual_A(const TypeACoords& c);
/// Fixed points of dual_A among all sl_n ideals, in enumeration order.
std::vector<TypeACoords> self_dual_ideals_A(int n);

/// Root of B_p or C_p sitting in box (i, j) of the shifted diagram.
RootVector shifted_box_root(LieType type, int p, int i, int j);
/// Inverse of shifted_box_root, by positive-root index.
std::pair<int, int> root_box(const RootSystem& rs, int root);

TypeCCoords coords_BC(const Ideal& ideal);
Ideal ideal_from_coords_BC(const RootSystem& rs, const TypeCCoords& c);

/// Unfold to a self-conjugate sl_2p ideal, dualize there, fold back.
TypeCCoords dual_C(const TypeCCoords& c);
/// B_p ideals share their shifted diagrams with C_p ideals.
TypeCCoords dual_B(const TypeCCoords& c);

/// A (any rank), B, C and G2.
bool has_duality(LieType type, int rank);
/// Throws UnsupportedError for types without an implemented duality.
Antichain dual(const RootSystem& rs, const Antichain& gamma);
Ideal dual(const Ideal& ideal);

/// The fixed G2 involution as (generators, dual generators) root vectors.
const std::vector<std::pair<std::vector<RootVector>, std::vector<RootVector>>>& g2_duality_table();

/// Dual of an antichain of the (possibly reducible) subsystem spanned by the
/// simple roots `simple_subset`, taken componentwise. Components of types
/// without a duality throw UnsupportedError.
Antichain dual_in_subsystem(const RootSystem& rs, std::span<const int> simple_subset, const Antichain& gamma);

using DualityMap = std::function<Antichain(const Antichain&)>;

struct ConjectureReport {
  int antichains = 0;
  int fixed_points = 0;
  bool involution = true;
  bool generator_pairing = true;  // #Gamma + #Gamma* = p
  bool simple_removal = true;     // alpha in Gamma => Gamma* = (Gamma \ alpha)* in Delta(Pi \ alpha)
  bool simple_addition = true;    // Gamma in Delta(Pi \ alpha) => Gamma* = {alpha} + dual there
  bool height_antichains = true;  // Delta+(k)* = Delta+(h + 1 - k)
  bool long_short = true;         // long/short distribution of Gamma, Gamma* matches Pi
  bool simple_subsets = true;     // I(A)* = I(Pi \ A) for A in Pi
  std::vector<std::string> violations;

  bool ok() const {
    return involution && generator_pairing && simple_removal && simple_addition && height_antichains && long_short &&
           simple_subsets;
  }
};

/// Checks every antichain of rs against the listed properties; subsystem
/// duals come from dual_in_subsystem.
ConjectureReport conjecture_properties_check(const RootSystem& rs, const DualityMap& dual_fn);

/// All involutions on the antichains of rs satisfying the properties of
/// ConjectureReport, up to `limit` of them.
std::vector<std::map<Antichain, Antichain>> find_dualities(const RootSystem& rs, std::size_t limit = 16);

std::string describe(const RootSystem& rs, const Antichain& gamma);

}  // namespace adnil
