#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adnil/affine.hpp"
#include "adnil/duality.hpp"
#include "adnil/error.hpp"
#include "adnil/ideals.hpp"
#include "adnil/record.hpp"
#include "adnil/rootsys.hpp"
#include "adnil/verify.hpp"

namespace {

constexpr const char* kVersion = "adnil 1.0.0";

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3 };

struct SystemArgs {
  std::string type;
  int rank = 0;
};

void add_system_options(CLI::App* cmd, SystemArgs& args) {
  cmd->add_option("--type", args.type, "Cartan type letter A-G")->required();
  cmd->add_option("--rank", args.rank, "rank")->required();
}

const adnil::RootSystem& system_of(const SystemArgs& args) {
  return adnil::root_system(adnil::parse_lie_type(args.type), args.rank);
}

std::vector<adnil::IdealRecord> build_records(const std::vector<adnil::Ideal>& ideals, int jobs) {
  std::vector<adnil::IdealRecord> out(ideals.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < ideals.size(); k += workers)
        out[k] = adnil::make_record(ideals[k], static_cast<std::int64_t>(k));
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

void print_json_lines(const std::vector<nlohmann::json>& items) {
  std::cout << "[\n";
  for (std::size_t k = 0; k < items.size(); ++k) std::cout << items[k].dump() << (k + 1 < items.size() ? ",\n" : "\n");
  std::cout << "]\n";
}

int run_enumerate(const SystemArgs& args, const std::string& format, int jobs) {
  const auto& rs = system_of(args);
  const auto records = build_records(adnil::enumerate_ideals(rs, jobs), jobs);
  if (format == "csv") {
    std::cout << adnil::csv_header() << '\n';
    for (const auto& r : records) std::cout << adnil::to_csv_row(r) << '\n';
  } else {
    std::vector<nlohmann::json> items;
    for (const auto& r : records) items.push_back(adnil::to_json(r));
    print_json_lines(items);
  }
  return kOk;
}

int run_stats(const SystemArgs& args, const std::string& statistic, const std::string& format) {
  const auto& rs = system_of(args);
  const adnil::Polynomial poly =
      statistic == "gen" ? adnil::narayana_polynomial(rs) : adnil::sim_polynomial(rs);
  if (format == "json") {
    nlohmann::json j = {{"type", std::string(1, adnil::type_letter(rs.type()))},
                        {"rank", rs.rank()},
                        {"statistic", statistic},
                        {"coefficients", poly}};
    std::cout << j.dump() << '\n';
    return kOk;
  }
  for (std::size_t k = 0; k < poly.size(); ++k) std::cout << (k ? " " : "") << poly[k];
  std::cout << '\n';
  return kOk;
}

int run_dual(const SystemArgs& args, const std::string& generators, const std::string& format) {
  const auto& rs = system_of(args);
  const adnil::Antichain gamma = adnil::parse_generators(rs, generators);
  if (!adnil::has_duality(rs.type(), rs.rank()))
    throw adnil::UnsupportedError("no duality implemented for type " + args.type);
  const adnil::Ideal star = adnil::dual(adnil::up_closure(rs, gamma));
  std::int64_t index = -1;
  if (adnil::closed_form_counts(rs).total <= 200000) {
    const auto all = adnil::enumerate_ideals(rs);
    for (std::size_t k = 0; k < all.size(); ++k)
      if (all[k] == star) index = static_cast<std::int64_t>(k);
  }
  const adnil::IdealRecord r = adnil::make_record(star, index);
  if (format == "csv") {
    std::cout << adnil::csv_header() << '\n' << adnil::to_csv_row(r) << '\n';
  } else {
    std::cout << adnil::to_json(r).dump() << '\n';
  }
  return kOk;
}

int run_verify(bool full, const std::vector<std::string>& names, const std::string& format, int jobs, bool list) {
  if (list) {
    for (const auto& c : adnil::claims()) std::cout << c.name << "  " << c.summary << '\n';
    return kOk;
  }
  const adnil::Scope scope = full ? adnil::Scope::kFull : adnil::Scope::kQuick;
  std::vector<adnil::ClaimResult> results;
  if (names.empty()) {
    results = adnil::run_all(scope, jobs);
  } else {
    for (const auto& n : names) results.push_back(adnil::run_claim(n, scope, jobs));
  }
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (format == "json") {
    nlohmann::json report = {{"scope", full ? "full" : "quick"}, {"passed", all}, {"claims", nlohmann::json::array()}};
    for (const auto& r : results) report["claims"].push_back(adnil::to_json(r));
    std::cout << report.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
      for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
    }
    std::cout << (all ? "all claims passed" : "some claims failed") << '\n';
  }
  return all ? kOk : kFailed;
}

nlohmann::json rational_array(const adnil::RationalVector& v) {
  auto j = nlohmann::json::array();
  for (const auto& q : v) j.push_back(adnil::to_string(q));
  return j;
}

std::string rational_list(const adnil::RationalVector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ";" : "") + adnil::to_string(v[k]);
  return s;
}

int run_simplex(const SystemArgs& args, const std::string& format) {
  const auto& rs = system_of(args);
  const auto vertices = adnil::simplex_vertices(rs);
  const auto points = adnil::lattice_points_in_simplex(rs);
  if (format == "csv") {
    std::cout << "kind,index,coords\n";
    for (std::size_t k = 0; k < vertices.size(); ++k)
      std::cout << "vertex," << k << ',' << rational_list(vertices[k].coords) << '\n';
    for (std::size_t k = 0; k < points.size(); ++k)
      std::cout << "point," << k << ',' << rational_list(points[k].coords) << '\n';
    return kOk;
  }
  nlohmann::json j = {{"type", std::string(1, adnil::type_letter(rs.type()))}, {"rank", rs.rank()}};
  j["vertices"] = nlohmann::json::array();
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    j["vertices"].push_back(rational_array(vertices[k].coords));
    if (vertices[k].in_coroot_lattice(rs)) j["integral_vertex"] = k;
  }
  j["lattice_points"] = nlohmann::json::array();
  for (const auto& pt : points) j["lattice_points"].push_back(rational_array(pt.coords));
  std::cout << j.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ad-nilpotent ideals of Borel subalgebras: enumeration, statistics, duality and checks"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress the version banner");
  app.set_version_flag("--version", kVersion);

  SystemArgs sys;
  int jobs = 1;
  std::string format = "json";
  std::string statistic = "sim";
  std::string generators;
  std::string stats_format = "text";
  std::string verify_format = "text";
  std::vector<std::string> claim_names;
  bool quick = false, full = false, list = false;

  auto* enumerate = app.add_subcommand("enumerate", "list every ideal with its statistics");
  add_system_options(enumerate, sys);
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "coefficients of the sim or generator-count polynomial");
  add_system_options(stats, sys);
  stats->add_option("--statistic", statistic)->check(CLI::IsMember({"sim", "gen"}));
  stats->add_option("--format", stats_format)->check(CLI::IsMember({"text", "json"}));

  auto* dual = app.add_subcommand("dual", "dual ideal (types A, B, C, G2)");
  add_system_options(dual, sys);
  dual->add_option("--generators", generators, "e.g. \"1+2\", \"0121,1110\" or \"(1,5),(2,6)\"")->required();
  dual->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run the named checks");
  verify->add_option("--claim", claim_names, "claim name (repeatable)");
  auto* quick_flag = verify->add_flag("--quick", quick, "ranks <= 4 (default)");
  verify->add_flag("--full", full, "every rank and system in scope")->excludes(quick_flag);
  verify->add_flag("--list", list, "list claim names");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* simplex = app.add_subcommand("simplex", "vertices and coroot-lattice points of the simplex");
  add_system_options(simplex, sys);
  simplex->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (!quiet) std::cerr << kVersion << '\n';

  try {
    if (enumerate->parsed()) return run_enumerate(sys, format, jobs);
    if (stats->parsed()) return run_stats(sys, statistic, stats_format);
    if (dual->parsed()) return run_dual(sys, generators, format);
    if (verify->parsed()) return run_verify(full, claim_names, verify_format, jobs, list);
    if (simplex->parsed()) return run_simplex(sys, format);
  } catch (const adnil::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
