#include "adnil/record.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "adnil/affine.hpp"
#include "adnil/duality.hpp"

namespace adnil {

namespace {

std::vector<RootVector> root_vectors(const RootSystem& rs, const Antichain& a) {
  std::vector<RootVector> out;
  for (int g : a.roots()) out.push_back(rs.root(g));
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int to_int(std::string_view s, std::string_view item) {
  if (!all_digits(s) || s.size() > 6) throw std::invalid_argument("cannot read '" + std::string(item) + "'");
  return std::stoi(std::string(s));
}

RootVector parse_item(const RootSystem& rs, std::string_view item) {
  const int p = rs.rank();
  RootVector v(p, 0);
  auto add_simple = [&](int i, int times) {
    if (i < 1 || i > p)
      throw std::invalid_argument("simple root index " + std::to_string(i) + " out of range in '" +
                                  std::string(item) + "'");
    v[i - 1] += times;
  };
  if (all_digits(item) && static_cast<int>(item.size()) == p) {
    for (int k = 0; k < p; ++k) v[k] = item[k] - '0';
  } else if (all_digits(item)) {
    add_simple(to_int(item, item), 1);
  } else {
    std::size_t start = 0;
    while (start <= item.size()) {
      std::size_t end = item.find('+', start);
      if (end == std::string_view::npos) end = item.size();
      std::string_view term = item.substr(start, end - start);
      std::size_t star = term.find('*');
      if (star == std::string_view::npos) add_simple(to_int(term, item), 1);
      else add_simple(to_int(term.substr(star + 1), item), to_int(term.substr(0, star), item));
      start = end + 1;
    }
  }
  return v;
}

}  // namespace

std::string root_label(const RootVector& v) {
  const bool wide = std::any_of(v.begin(), v.end(), [](int c) { return c < 0 || c > 9; });
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (wide && k) s += '.';
    s += std::to_string(v[k]);
  }
  return s;
}

Antichain parse_generators(const RootSystem& rs, std::string_view text) {
  std::vector<int> roots;
  auto add = [&](const RootVector& v, std::string_view item) {
    auto idx = rs.index_of(v);
    if (!idx) throw std::invalid_argument("'" + std::string(item) + "' is not a positive root of " + rs.name());
    roots.push_back(*idx);
  };
  const std::string s(text);
  if (s.find('(') != std::string::npos) {
    if (rs.type() != LieType::A) throw std::invalid_argument("(i,j) pairs are only meaningful for type A");
    static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::string rest = std::regex_replace(s, pair_re, "");
    if (rest.find_first_not_of(" ,;\t") != std::string::npos)
      throw std::invalid_argument("cannot read generator list '" + s + "'");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), pair_re); it != std::sregex_iterator(); ++it) {
      const int i = std::stoi((*it)[1]), j = std::stoi((*it)[2]);
      if (i < 1 || j > rs.rank() + 1 || i >= j) throw std::invalid_argument("bad pair " + it->str());
      roots.push_back(root_index_A(rs, i, j));
    }
    return Antichain(rs, roots);
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find_first_of(" ,;\t", pos);
    if (end == std::string::npos) end = s.size();
    if (end > pos) {
      std::string_view item(s.data() + pos, end - pos);
      add(parse_item(rs, item), item);
    }
    pos = end + 1;
  }
  return Antichain(rs, roots);
}

IdealRecord make_record(const Ideal& ideal, std::int64_t index) {
  const RootSystem& rs = ideal.system();
  IdealRecord r;
  r.type = type_letter(rs.type());
  r.rank = rs.rank();
  r.index = index;
  r.generators = root_vectors(rs, generators(ideal));
  r.size = ideal.size();
  r.sim = sim(ideal);
  r.gen = static_cast<int>(r.generators.size());
  r.nilpotence_class = class_of_nilpotence(ideal);
  r.d_point = d_point(admissible_element(ideal)).coords;
  if (has_duality(rs.type(), rs.rank())) r.dual_generators = root_vectors(rs, dual(rs, generators(ideal)));
  return r;
}

nlohmann::json to_json(const IdealRecord& r) {
  nlohmann::json j;
  j["type"] = std::string(1, r.type);
  j["rank"] = r.rank;
  j["index"] = r.index;
  j["generators"] = r.generators;
  j["size"] = r.size;
  j["sim"] = r.sim;
  j["gen"] = r.gen;
  j["class"] = r.nilpotence_class;
  std::vector<std::string> d;
  for (const auto& q : r.d_point) d.push_back(to_string(q));
  j["d_point"] = d;
  if (r.dual_generators) j["dual_generators"] = *r.dual_generators;
  return j;
}

IdealRecord record_from_json(const nlohmann::json& j) {
  try {
    IdealRecord r;
    const std::string type = j.at("type").get<std::string>();
    if (type.size() != 1) throw std::invalid_argument("bad type label '" + type + "'");
    r.type = type[0];
    r.rank = j.at("rank").get<int>();
    r.index = j.at("index").get<std::int64_t>();
    r.generators = j.at("generators").get<std::vector<RootVector>>();
    r.size = j.at("size").get<int>();
    r.sim = j.at("sim").get<int>();
    r.gen = j.at("gen").get<int>();
    r.nilpotence_class = j.at("class").get<int>();
    for (const auto& s : j.at("d_point")) r.d_point.push_back(parse_rational(s.get<std::string>()));
    if (j.contains("dual_generators")) r.dual_generators = j.at("dual_generators").get<std::vector<RootVector>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string csv_header() { return "type,rank,ideal_index,size,sim,gen,class,generators"; }

std::string to_csv_row(const IdealRecord& r) {
  std::string gens;
  for (std::size_t k = 0; k < r.generators.size(); ++k) {
    if (k) gens += ';';
    gens += root_label(r.generators[k]);
  }
  return std::string(1, r.type) + ',' + std::to_string(r.rank) + ',' + std::to_string(r.index) + ',' +
         std::to_string(r.size) + ',' + std::to_string(r.sim) + ',' + std::to_string(r.gen) + ',' +
         std::to_string(r.nilpotence_class) + ',' + gens;
}

}  // namespace adnil
