#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "adnil/affine.hpp"
#include "adnil/duality.hpp"
#include "adnil/record.hpp"

using namespace adnil;

namespace {

Antichain roots_of(const RootSystem& rs, std::vector<RootVector> vs) {
  std::vector<int> ids;
  for (const auto& v : vs) ids.push_back(*rs.index_of(v));
  return Antichain(rs, ids);
}

}  // namespace

TEST_CASE("records round-trip through JSON") {
  for (auto [t, p] : std::vector<std::pair<LieType, int>>{{LieType::A, 3}, {LieType::C, 3}, {LieType::D, 4},
                                                           {LieType::G, 2}, {LieType::F, 4}}) {
    const RootSystem& rs = root_system(t, p);
    const auto ideals = enumerate_ideals(rs);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      const IdealRecord r = make_record(ideals[i], static_cast<std::int64_t>(i));
      const auto j = to_json(r);
      CHECK(record_from_json(j) == r);
      CHECK(record_from_json(nlohmann::json::parse(j.dump())) == r);
      CHECK(r.dual_generators.has_value() == has_duality(t, p));
      for (const auto& x : j.at("d_point")) {
        const std::string s = x.get<std::string>();
        CHECK(s.find('/') != std::string::npos);
        CHECK(s.find('.') == std::string::npos);
      }
    }
  }
}

TEST_CASE("record fields") {
  const RootSystem& rs = root_system(LieType::A, 2);
  const Ideal heis = heisenberg_ideal(rs);
  const IdealRecord r = make_record(heis, 4);
  CHECK(r.type == 'A');
  CHECK(r.rank == 2);
  CHECK(r.size == 3);
  CHECK(r.sim == 2);
  CHECK(r.gen == 2);
  CHECK(r.nilpotence_class == 2);
  CHECK(r.generators == std::vector<RootVector>{{1, 0}, {0, 1}});
  CHECK(r.d_point == RationalVector{Rational(-1), Rational(-1)});
  REQUIRE(r.dual_generators.has_value());
  CHECK(r.dual_generators->empty());
  const auto j = to_json(r);
  CHECK(j.at("class") == 2);
  CHECK(j.at("d_point") == nlohmann::json::array({"-1/1", "-1/1"}));
  CHECK(to_csv_row(r) == "A,2,4,3,2,2,2,10;01");
  CHECK(csv_header() == "type,rank,ideal_index,size,sim,gen,class,generators");
}

TEST_CASE("malformed JSON records are rejected") {
  const RootSystem& rs = root_system(LieType::B, 2);
  auto j = to_json(make_record(heisenberg_ideal(rs), 0));
  auto bad = j;
  bad.erase("size");
  CHECK_THROWS_AS(record_from_json(bad), std::invalid_argument);
  bad = j;
  bad["type"] = "BC";
  CHECK_THROWS_AS(record_from_json(bad), std::invalid_argument);
  bad = j;
  bad["d_point"] = nlohmann::json::array({"1/0", "0/1"});
  CHECK_THROWS_AS(record_from_json(bad), std::invalid_argument);
  bad = j;
  bad["d_point"] = nlohmann::json::array({0.5, "0/1"});
  CHECK_THROWS_AS(record_from_json(bad), std::invalid_argument);
}

TEST_CASE("root labels") {
  CHECK(root_label({0, 1, 2, 1}) == "0121");
  CHECK(root_label({10, 1}) == "10.1");
  CHECK(root_label({-1, 0}) == "-1.0");
}

TEST_CASE("generator parsing") {
  const RootSystem& c3 = root_system(LieType::C, 3);
  CHECK(parse_generators(c3, "1+2") == roots_of(c3, {{1, 1, 0}}));
  CHECK(parse_generators(c3, "110") == roots_of(c3, {{1, 1, 0}}));
  CHECK(parse_generators(c3, "2*2+3") == roots_of(c3, {{0, 2, 1}}));
  CHECK(parse_generators(c3, "1, 2*2+3") == roots_of(c3, {{1, 0, 0}, {0, 2, 1}}));
  CHECK(parse_generators(c3, "100;021") == roots_of(c3, {{1, 0, 0}, {0, 2, 1}}));
  CHECK(parse_generators(c3, "3") == roots_of(c3, {{0, 0, 1}}));
  CHECK(parse_generators(c3, "").empty());
  const RootSystem& a6 = root_system(LieType::A, 6);
  CHECK(parse_generators(a6, "(1,5),(2,6),(3,7)") ==
        roots_of(a6, {{1, 1, 1, 1, 0, 0}, {0, 1, 1, 1, 1, 0}, {0, 0, 1, 1, 1, 1}}));

  CHECK_THROWS_AS(parse_generators(c3, "4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators(c3, "200"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators(c3, "1+x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators(c3, "1,110"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators(c3, "(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators(a6, "(3,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators(a6, "(1,9)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators(a6, "(1,2) junk"), std::invalid_argument);
}
