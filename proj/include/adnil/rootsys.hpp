#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adnil/rational.hpp"

namespace adnil {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

LieType parse_lie_type(std::string_view text);
inline char type_letter(LieType t) { return static_cast<char>(t); }

/// Integer coordinates in the simple-root basis alpha_1..alpha_p.
using RootVector = std::vector<int>;

/// Immutable data for one irreducible reduced root system, simple roots
/// numbered as in Bourbaki and the inner product scaled so that long roots
/// have squared length 2.
///
/// Positive roots are indexed 0..N-1 ordered by height, simple roots first
/// (index i is alpha_{i+1}). Signed root ids cover all of Delta: id i < N is
/// the positive root i and id N+i its negative.
class RootSystem {
 public:
  /// Throws std::invalid_argument for an invalid (type, rank) pair.
  static RootSystem build(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  int num_positive() const { return static_cast<int>(roots_.size()); }
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  const RootVector& root(int i) const { return roots_.at(i); }
  bool is_simple(int i) const { return i < rank_; }

  std::optional<int> index_of(const RootVector& v) const;

  // Signed ids.
  int num_roots() const { return 2 * num_positive(); }
  bool is_positive_id(int id) const { return id < num_positive(); }
  int negate(int id) const { return id < num_positive() ? id + num_positive() : id - num_positive(); }
  RootVector signed_root(int id) const;
  std::optional<int> signed_index_of(const RootVector& v) const;

  /// Index of root a + root b when that sum is a positive root.
  std::optional<int> root_sum(int a, int b) const {
    int s = sum_table_[a * num_positive() + b];
    if (s < 0) return std::nullopt;
    return s;
  }

  /// Pairs (a, b), a < b, of positive roots with a + b = root.
  const std::vector<std::pair<int, int>>& splittings(int root) const { return splittings_.at(root); }

  const RationalMatrix& gram() const { return gram_; }
  /// <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  int cartan(int i, int j) const { return cartan_[i][j]; }
  bool adjacent(int i, int j) const { return i != j && gram_[i][j] != 0; }

  Rational inner(const RationalVector& x, const RationalVector& y) const;
  Rational inner(const RootVector& x, const RootVector& y) const;

  int height(int i) const { return heights_.at(i); }
  bool is_long(int i) const { return squared_length(i) == Rational(2); }
  Rational squared_length(int i) const { return inner(roots_.at(i), roots_.at(i)); }

  int highest_root_index() const { return num_positive() - 1; }
  const RootVector& highest_root() const { return roots_.back(); }
  const std::vector<int>& marks() const { return roots_.back(); }
  int coxeter_number() const { return coxeter_; }
  const std::vector<int>& exponents() const { return exponents_; }
  std::int64_t weyl_group_order() const;

  /// rho^vee: (rho^vee, alpha_i) = 1 for every i.
  const RationalVector& rho_covector() const { return rho_covector_; }
  /// pi_i with (pi_i, alpha_j) = delta_ij, in simple-root coordinates.
  const RationalVector& fundamental_coweight(int i) const { return coweights_.at(i); }

  /// <gamma, alpha_i^vee> for the signed root id.
  int coroot_pairing(int id, int i) const { return pairing_[id * rank_ + i]; }
  /// (gamma, theta), an integer since theta is long.
  int theta_pairing(int id) const { return theta_pairing_[id]; }
  /// gamma^vee in the coroot basis alpha_i^vee.
  const std::vector<int>& coroot_coords(int id) const { return coroots_[id]; }
  /// s_i(gamma) for 0-based simple index i.
  int reflect(int i, int id) const { return reflect_[i][id]; }
  /// s_theta(gamma).
  int reflect_theta(int id) const { return reflect_theta_[id]; }
  /// s_beta(gamma) for signed ids beta, gamma.
  int reflect_in(int beta, int id) const {
    return reflect_in_[static_cast<std::size_t>(beta % num_positive()) * num_roots() + id];
  }
  /// Inverse of the matrix with entries <alpha_j, alpha_i^vee> (row j, column i).
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }

  /// Simple-root coordinates of sum_i c_i alpha_i^vee.
  RationalVector coroot_to_root_coords(const std::vector<int>& c) const;
  RationalVector coroot_to_root_coords(const RationalVector& c) const;
  /// Coroot-basis coordinates of x; empty when x is not in the coroot lattice.
  std::optional<std::vector<int>> root_to_coroot_coords(const RationalVector& x) const;

 private:
  RootSystem() = default;

  LieType type_{LieType::A};
  int rank_ = 0;
  int coxeter_ = 0;
  std::vector<int> exponents_;
  RationalMatrix gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> roots_;
  std::vector<int> heights_;
  int find_id(const RootVector& v) const;  // -1 when v is not a root

  std::unordered_map<std::uint64_t, int> lookup_;  // packed coordinates -> signed id
  std::vector<int> sum_table_;
  std::vector<std::vector<std::pair<int, int>>> splittings_;
  RationalVector rho_covector_;
  std::vector<RationalVector> coweights_;
  std::vector<int> pairing_;
  std::vector<int> theta_pairing_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::vector<int>> reflect_;
  std::vector<int> reflect_theta_;
  std::vector<int> reflect_in_;
  RationalMatrix cartan_inverse_;
};

/// Shared, lazily built instance with a stable address.
const RootSystem& root_system(LieType type, int rank);

}  // namespace adnil
