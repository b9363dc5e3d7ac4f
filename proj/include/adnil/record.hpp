#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adnil/ideals.hpp"
#include "adnil/rational.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

/// One ideal as emitted by the command-line tool.
struct IdealRecord {
  char type = 'A';
  int rank = 1;
  std::int64_t index = 0;
  std::vector<RootVector> generators;
  int size = 0;
  int sim = 0;
  int gen = 0;
  int nilpotence_class = 0;
  RationalVector d_point;
  std::optional<std::vector<RootVector>> dual_generators;

  friend bool operator==(const IdealRecord&, const IdealRecord&) = default;
};

/// Fills every field; dual_generators only where a duality exists.
IdealRecord make_record(const Ideal& ideal, std::int64_t index);

nlohmann::json to_json(const IdealRecord& r);
/// Throws std::invalid_argument on a malformed record.
IdealRecord record_from_json(const nlohmann::json& j);

std::string csv_header();
std::string to_csv_row(const IdealRecord& r);

/// Coordinates as a digit string, e.g. "0121"; coefficients above 9 are
/// dot-separated.
std::string root_label(const RootVector& v);

/// Parses a generator list. Accepted items, separated by commas, semicolons
/// or spaces: coordinate strings of length rank ("0121"), sums of simple
/// root indices with optional multiplicities ("1+2", "2*2+3"), a single
/// simple index ("3"), and for type A the pairs "(i,j)". Throws
/// std::invalid_argument naming the offending item.
Antichain parse_generators(const RootSystem& rs, std::string_view text);

}  // namespace adnil
