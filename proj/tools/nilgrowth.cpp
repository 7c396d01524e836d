// nilgrowth command line: exact experiments on nilpotent Lie arithmetic,
// lattice exploration, harmonious sandwiches, growth, and relation scales.
//
// Exit codes: 0 success, 2 usage error, 3 resource budget exceeded,
// 4 asserted bound violated.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nilgrowth/errors.hpp"
#include "nilgrowth/heis_models.hpp"
#include "nilgrowth/prng.hpp"
#include "nilgrowth/heisenberg.hpp"
#include "nilgrowth/report.hpp"
#include "nilgrowth/suites.hpp"

namespace ng = nilgrowth;

namespace {

constexpr int kOk = 0, kUsage = 2, kResource = 3, kBoundViolation = 4;

struct OutputSpec {
  std::string path;  // empty = stdout
  std::string format = "csv";
};

void emit(const OutputSpec& out, const std::string& csv, const ng::Json& json) {
  std::string payload =
      out.format == "json" ? ng::json_to_string(json) : csv;
  if (out.path.empty())
    std::cout << payload;
  else
    ng::write_text_file(out.path, payload);
}

ng::Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ng::usage_error("cannot open config file: " + path);
  ng::Json j;
  in >> j;
  return j;
}

std::vector<long long> parse_moduli(const std::string& csv) {
  std::vector<long long> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

ng::ConvexBody body_from_json(const ng::Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "box") {
    ng::RatVec h;
    for (const auto& e : j.at("half_widths"))
      h.push_back(ng::rat_from_string(e.get<std::string>()));
    return ng::ConvexBody::box(std::move(h));
  }
  if (kind == "l1")
    return ng::ConvexBody::l1_ball(
        j.at("dim").get<size_t>(),
        ng::rat_from_string(j.at("radius").get<std::string>()));
  if (kind == "l2")
    return ng::ConvexBody::l2_ball(
        j.at("dim").get<size_t>(),
        ng::rat_from_string(j.at("radius").get<std::string>()));
  if (kind == "graded") {
    std::vector<unsigned> degrees;
    for (const auto& e : j.at("degrees")) degrees.push_back(e.get<unsigned>());
    return ng::ConvexBody::graded_box(
        std::move(degrees),
        ng::rat_from_string(j.at("scale").get<std::string>()));
  }
  if (kind == "polytope") {
    std::vector<ng::RatVec> vs;
    for (const auto& row : j.at("vertices")) {
      ng::RatVec v;
      for (const auto& e : row)
        v.push_back(ng::rat_from_string(e.get<std::string>()));
      vs.push_back(std::move(v));
    }
    return ng::ConvexBody::polytope(std::move(vs));
  }
  throw ng::usage_error("unknown body kind: " + kind);
}

/// Group spec: {kind, moduli?, m?, generators?: [[...]]}.
ng::ConcreteGroup group_from_json(const ng::Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  std::vector<ng::ConcreteGroup::El> gens;
  if (j.contains("generators"))
    for (const auto& row : j["generators"]) {
      ng::ConcreteGroup::El e;
      for (const auto& x : row) e.push_back(x.get<long long>());
      gens.push_back(std::move(e));
    }
  if (kind == "finite-abelian") {
    std::vector<long long> moduli;
    for (const auto& m : j.at("moduli")) moduli.push_back(m.get<long long>());
    return gens.empty() ? ng::ConcreteGroup::finite_abelian(moduli)
                        : ng::ConcreteGroup::finite_abelian(moduli, gens);
  }
  if (kind == "heisenberg-z")
    return gens.empty() ? ng::ConcreteGroup::heisenberg_z()
                        : ng::ConcreteGroup::heisenberg_z(gens);
  if (kind == "heisenberg-mod")
    return ng::ConcreteGroup::heisenberg_mod(j.at("m").get<long long>());
  throw ng::usage_error("unknown group kind: " + kind);
}

ng::IntegerLattice lattice_from_json(const ng::Json& j) {
  size_t dim = j.at("ambient_dim").get<size_t>();
  std::vector<ng::RatVec> rows;
  for (const auto& row : j.at("vectors")) {
    ng::RatVec v;
    for (const auto& e : row)
      v.push_back(ng::rat_from_string(e.get<std::string>()));
    rows.push_back(std::move(v));
  }
  return ng::IntegerLattice::span(dim, rows);
}

int run(int argc, char** argv) {
  CLI::App app{"nilgrowth: exact nilpotent-group growth and lattice "
               "exploration experiments"};
  app.require_subcommand(1);

  std::string config_path, output_path, format = "csv";
  std::uint64_t seed = 7;
  std::uint64_t budget_points = 0;
  app.add_option("--config", config_path, "JSON config overriding flags");
  app.add_option("--output", output_path, "output file (default stdout)");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "PRNG seed for randomized suites");
  app.add_option("--budget-points", budget_points,
                 "point budget override (also NILGROWTH_BUDGET_POINTS)");

  // lie
  auto* lie = app.add_subcommand("lie", "Hall basis and Zassenhaus tables");
  lie->fallthrough();
  unsigned lie_k = 2, lie_s = 2;
  std::string lie_dump = "basis";
  lie->add_option("--k", lie_k, "generator count");
  lie->add_option("--s", lie_s, "nilpotency step");
  lie->add_option("--dump", lie_dump, "basis or zassenhaus")
      ->check(CLI::IsMember({"basis", "zassenhaus"}));

  // lattice
  auto* lat = app.add_subcommand(
      "lattice", "explore a lattice with nested bodies from --config");
  lat->fallthrough();

  // harmonious
  auto* harm = app.add_subcommand(
      "harmonious", "harmonious sandwich report for a Heisenberg subgroup");
  harm->fallthrough();
  std::string harm_c1, harm_c2;
  harm->add_option("--c1", harm_c1, "override C1");
  harm->add_option("--c2", harm_c2, "override C2");

  // growth
  auto* growth = app.add_subcommand("growth", "growth profiles");
  growth->fallthrough();
  std::string growth_group = "heisenberg";
  std::string growth_moduli;
  unsigned growth_n = 3, growth_nmax = 12, growth_rmax = 8;
  long long growth_mod = 3;
  growth->add_option("--group", growth_group,
                     "abelian | heisenberg | heisenberg-mod | heisenberg-box");
  growth->add_option("--moduli", growth_moduli, "abelian moduli a,b,c");
  growth->add_option("--m", growth_mod, "heisenberg-mod modulus");
  growth->add_option("--N", growth_n, "box half-width parameter");
  growth->add_option("--n-max", growth_nmax, "box growth maximum power");
  growth->add_option("--r-max", growth_rmax, "ball radius maximum");

  // relations
  auto* rel = app.add_subcommand("relations", "abelian new-relation scales");
  rel->fallthrough();
  std::string rel_moduli;
  unsigned rel_max = 10;
  rel->add_option("--abelian", rel_moduli, "moduli a,b,c")->required();
  rel->add_option("--max-scale", rel_max, "largest scale to test");

  // verify
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->fallthrough();
  std::string suite = "all";
  unsigned trials = 0;
  std::string dims = "1..4";
  verify->add_option("--suite", suite,
                     "bch heisenberg minkowski exploration sandwich indices "
                     "folner relations scales boxgrowth lemmas all");
  verify->add_option("--trials", trials, "randomized trial count");
  verify->add_option("--dims", dims, "dimension range lo..hi");

  CLI11_PARSE(app, argc, argv);

  ng::Json config;
  if (!config_path.empty()) {
    config = load_config(config_path);
    if (config.contains("seed")) seed = config["seed"].get<std::uint64_t>();
    if (config.contains("format")) format = config["format"].get<std::string>();
    if (config.contains("output")) output_path = config["output"].get<std::string>();
    if (config.contains("suite")) suite = config["suite"].get<std::string>();
    if (config.contains("trials")) trials = config["trials"].get<unsigned>();
    if (config.contains("budget_points"))
      budget_points = config["budget_points"].get<std::uint64_t>();
  }

  ng::Budget budget = ng::Budget::with_env();
  if (budget_points > 0) budget.points = budget_points;
  OutputSpec out{output_path, format};

  if (*lie) {
    ng::BasisPtr basis = ng::HallBasis::make(lie_k, lie_s);
    if (lie_dump == "zassenhaus") {
      std::string payload = ng::zassenhaus_terms_json(lie_s);
      emit(out, payload, ng::Json::parse(payload));
    } else {
      std::string csv = ng::hall_basis_csv(*basis);
      ng::Json j;
      j["basis_id"] = basis->id();
      j["dim"] = basis->dim();
      emit(out, csv, j);
    }
    return kOk;
  }

  if (*lat) {
    if (config_path.empty())
      throw ng::usage_error("lattice exploration needs --config");
    ng::IntegerLattice lattice = lattice_from_json(config.at("lattice"));
    std::vector<ng::ConvexBody> bodies;
    for (const auto& b : config.at("bodies")) bodies.push_back(body_from_json(b));
    ng::ExplorationReport rep = ng::explore(lattice, bodies, budget);
    emit(out, ng::exploration_csv(rep), ng::exploration_to_json(rep));
    return rep.bound_ok ? kOk : kBoundViolation;
  }

  if (*harm) {
    ng::GroupModel gamma;
    if (!config_path.empty() && config.contains("generators")) {
      std::vector<ng::HeisEl> gens;
      for (const auto& row : config.at("generators"))
        gens.push_back(ng::HeisEl{ng::Int(row.at(0).get<long>()),
                                  ng::Int(row.at(1).get<long>()),
                                  ng::Int(row.at(2).get<long>())});
      gamma = ng::heis_subgroup_model(ng::HeisenbergSubgroup::generate(gens),
                                      "config subgroup");
    } else {
      gamma = ng::integer_heisenberg_model();
    }
    ng::ConstantTable constants = ng::ConstantTable::defaults(2);
    if (!harm_c1.empty() || !harm_c2.empty())
      constants = ng::ConstantTable::override(
          2,
          harm_c1.empty() ? constants.c1
                          : ng::Int(ng::rat_from_string(harm_c1).get_num()),
          harm_c2.empty() ? constants.c2
                          : ng::Int(ng::rat_from_string(harm_c2).get_num()));
    ng::EnumerationOptions opts;
    opts.max_word_length = 6;
    opts.pnorm_cap = 8;
    ng::SandwichReport rep =
        ng::index_sandwich_bound_check(gamma, constants, opts, budget);
    ng::Json j = ng::sandwich_to_json(rep);
    emit(out, ng::json_to_string(j), j);
    return rep.equality_ok && rep.bound_ok ? kOk : kBoundViolation;
  }

  if (*growth) {
    if (growth_group == "heisenberg-box") {
      ng::BoxGrowthProfile p = ng::box_growth_profile(growth_n, growth_nmax, seed, budget);
      emit(out, ng::box_growth_csv(p), ng::box_growth_to_json(p));
      return p.relations_ok ? kOk : kBoundViolation;
    }
    ng::ConcreteGroup g = ng::ConcreteGroup::heisenberg_z();
    if (!config_path.empty() && config.contains("group"))
      g = group_from_json(config["group"]);
    else if (growth_group == "abelian")
      g = ng::ConcreteGroup::finite_abelian(parse_moduli(growth_moduli));
    else if (growth_group == "heisenberg-mod")
      g = ng::ConcreteGroup::heisenberg_mod(growth_mod);
    else if (growth_group != "heisenberg")
      throw ng::usage_error("unknown group kind: " + growth_group);
    ng::GrowthProfile p = ng::growth_profile(g, growth_rmax, budget);
    emit(out, ng::growth_csv(p), ng::growth_to_json(p));
    return kOk;
  }

  if (*rel) {
    ng::ScaleReport rep =
        ng::abelian_relation_scales(parse_moduli(rel_moduli), rel_max, budget);
    emit(out, ng::scale_report_csv(rep), ng::scale_report_to_json(rep));
    return kOk;
  }

  if (*verify) {
    unsigned dmin = 1, dmax = 4;
    if (std::sscanf(dims.c_str(), "%u..%u", &dmin, &dmax) != 2 || dmin > dmax ||
        dmax > 8)
      throw ng::usage_error("bad --dims range: " + dims);
    if (suite == "all") {
      auto results = ng::run_acceptance(seed, budget);
      bool all_ok = true;
      std::ostringstream csv;
      csv << "# prng=" << ng::Prng::kAlgorithm << " seed=" << seed << "\n";
      csv << "suite,passed,detail\n";
      ng::Json j = ng::Json::array();
      for (const auto& r : results) {
        all_ok &= r.passed;
        csv << r.name << "," << (r.passed ? 1 : 0) << ",\"" << r.detail
            << "\"\n";
        ng::Json e;
        e["suite"] = r.name;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        e["summary"] = r.summary;
        j.push_back(e);
      }
      emit(out, csv.str(), j);
      return all_ok ? kOk : kBoundViolation;
    }
    ng::SuiteResult r = ng::run_suite(suite, seed, trials, dmin, dmax, budget);
    ng::Json j;
    j["suite"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    j["summary"] = r.summary;
    emit(out, r.csv, j);
    if (!r.passed) {
      std::cerr << "bound violation: " << r.detail << "\n";
      return kBoundViolation;
    }
    return kOk;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ng::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ng::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (const ng::bound_violation& e) {
    std::cerr << "bound violation: " << e.what() << "\n";
    return kBoundViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
