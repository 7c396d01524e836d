#include "nilgrowth/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

std::string canonical_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Json lie_element_to_json(const LieElement& x) {
  Json j;
  j["basis_id"] = x.basis()->id();
  Json coords = Json::array();
  for (const Rat& q : x.coords()) coords.push_back(rat_to_string(q));
  j["coords"] = coords;
  return j;
}

LieElement lie_element_from_json(const Json& j) {
  std::string id = j.at("basis_id").get<std::string>();
  unsigned k = 0, s = 0;
  if (std::sscanf(id.c_str(), "free(k=%u,s=%u)", &k, &s) != 2)
    throw usage_error("unrecognized basis id: " + id);
  BasisPtr basis = HallBasis::make(k, s);
  RatVec coords;
  for (const auto& entry : j.at("coords"))
    coords.push_back(rat_from_string(entry.get<std::string>()));
  return LieElement(std::move(basis), std::move(coords));
}

std::string hall_basis_csv(const HallBasis& basis) {
  std::ostringstream os;
  os << "index,degree,tree\n";
  for (size_t i = 0; i < basis.dim(); ++i)
    os << i << "," << basis.degree_of(i) << ","
       << tree_to_string(basis.elements()[i].tree) << "\n";
  os << "i,j,k,coeff\n";
  for (size_t i = 0; i < basis.dim(); ++i)
    for (size_t j = i + 1; j < basis.dim(); ++j)
      for (const auto& [k, c] : basis.structure(i, j))
        os << i << "," << j << "," << k << "," << rat_to_string(c) << "\n";
  return os.str();
}

std::string zassenhaus_terms_json(unsigned step) {
  Json levels = Json::array();
  for (const LiePolynomial& level : zassenhaus_terms(step)) {
    Json terms = Json::array();
    for (const LiePolynomialTerm& t : level) {
      Json term;
      term["coefficient"] = rat_to_string(t.coefficient);
      term["degree"] = t.degree;
      term["monomial"] = tree_to_string(t.monomial, [](unsigned v) {
        return v == 0 ? std::string("X") : std::string("Y");
      });
      terms.push_back(term);
    }
    levels.push_back(terms);
  }
  Json j;
  j["step"] = step;
  j["terms"] = levels;
  return json_to_string(j);
}

Json lattice_to_json(const IntegerLattice& lattice) {
  Json j;
  j["ambient_dim"] = lattice.ambient_dim();
  j["rank"] = lattice.rank();
  j["denominator"] = lattice.denominator().get_str();
  Json rows = Json::array();
  for (const auto& row : lattice.basis_int()) {
    Json r = Json::array();
    for (const Int& q : row) r.push_back(q.get_str());
    rows.push_back(r);
  }
  j["basis"] = rows;
  return j;
}

std::string exploration_csv(const ExplorationReport& rep) {
  std::ostringstream os;
  os << "scale,rank,covolume,changed,index_from_previous\n";
  size_t change_pos = 0;
  for (size_t n = 0; n < rep.chain.size(); ++n) {
    const IntegerLattice& l = rep.chain[n];
    bool changed = change_pos < rep.change_scales.size() &&
                   rep.change_scales[change_pos] == n;
    std::string covol = "0";
    if (l.rank() > 0) {
      Rat sq = l.covolume_squared();
      try {
        covol = rat_to_string(rat_sqrt_exact(sq));
      } catch (const std::invalid_argument&) {
        covol = rat_to_string(sq) + "^(1/2)";
      }
    }
    std::string index = "";
    if (changed) {
      const auto& idx = rep.change_indices[change_pos];
      index = idx ? idx->get_str() : "inf";
      ++change_pos;
    }
    os << n << "," << l.rank() << "," << covol << "," << (changed ? 1 : 0)
       << "," << index << "\n";
  }
  return os.str();
}

Json exploration_to_json(const ExplorationReport& rep) {
  Json j;
  j["ambient_dim"] = rep.ambient_dim;
  j["bound"] = rep.bound;
  j["bound_ok"] = rep.bound_ok;
  j["change_count"] = rep.change_count;
  Json scales = Json::array();
  for (size_t n : rep.change_scales) scales.push_back(n);
  j["change_scales"] = scales;
  Json chain = Json::array();
  for (const auto& l : rep.chain) chain.push_back(lattice_to_json(l));
  j["chain"] = chain;
  return j;
}

Json minkowski_to_json(const MinkowskiReport& rep) {
  Json j;
  j["dim"] = rep.dim;
  Json minima = Json::array();
  for (const GaugeValue& g : rep.minima.values) minima.push_back(g.str());
  j["minima"] = minima;
  j["covolume"] = rat_to_string(rep.covolume);
  j["volume_lo"] = rat_to_string(rep.volume.lo);
  j["volume_hi"] = rat_to_string(rep.volume.hi);
  j["rho_sq_lo"] = rat_to_string(rep.rho_sq_lo);
  j["rho_sq_hi"] = rat_to_string(rep.rho_sq_hi);
  if (rep.rho_exact) j["rho"] = rat_to_string(rep.rho);
  j["rho_approx"] = format_double(rep.rho_approx);
  j["rho_alt_normalization_approx"] = format_double(rep.rho_alt_approx);
  j["verdict"] = rep.verdict;
  return j;
}

std::string scale_report_csv(const ScaleReport& rep) {
  std::ostringstream os;
  os << "scale,canonical_hash,changed\n";
  for (size_t i = 0; i < rep.scales.size(); ++i) {
    bool changed = false;
    for (unsigned c : rep.change_scales)
      if (c == rep.scales[i]) changed = true;
    os << rep.scales[i] << "," << canonical_hash(rep.canonical_forms[i]) << ","
       << (changed ? 1 : 0) << "\n";
  }
  return os.str();
}

Json scale_report_to_json(const ScaleReport& rep) {
  Json j;
  Json scales = Json::array();
  for (unsigned n : rep.scales) scales.push_back(n);
  j["scales"] = scales;
  Json changes = Json::array();
  for (unsigned n : rep.change_scales) changes.push_back(n);
  j["change_scales"] = changes;
  j["change_count"] = rep.change_count;
  Json forms = Json::array();
  for (const std::string& f : rep.canonical_forms)
    forms.push_back(canonical_hash(f));
  j["canonical_hashes"] = forms;
  return j;
}

std::string growth_csv(const GrowthProfile& profile) {
  std::ostringstream os;
  os << "radius,size\n";
  for (size_t r = 0; r < profile.sizes.size(); ++r)
    os << r << "," << profile.sizes[r].get_str() << "\n";
  return os.str();
}

Json growth_to_json(const GrowthProfile& profile) {
  Json j;
  Json sizes = Json::array();
  for (const Int& s : profile.sizes) sizes.push_back(s.get_str());
  j["sizes"] = sizes;
  Json ratios = Json::array();
  for (const auto& [r, k] : profile.k_ratios) {
    Json e;
    e["r"] = r;
    e["k"] = rat_to_string(k);
    ratios.push_back(e);
  }
  j["doubling_ratios"] = ratios;
  if (profile.min_k) j["min_k"] = rat_to_string(*profile.min_k);
  return j;
}

std::string box_growth_csv(const BoxGrowthProfile& profile) {
  std::ostringstream os;
  os << "n,size\n";
  for (size_t n = 1; n <= profile.sizes.size(); ++n)
    os << n << "," << profile.sizes[n - 1].get_str() << "\n";
  os << "segment,slope\n";
  os << "low," << format_double(profile.slope_low) << "\n";
  os << "high," << format_double(profile.slope_high) << "\n";
  return os.str();
}

Json box_growth_to_json(const BoxGrowthProfile& profile) {
  Json j;
  j["N"] = profile.big_n;
  j["n_max"] = profile.n_max;
  Json sizes = Json::array();
  for (const Int& s : profile.sizes) sizes.push_back(s.get_str());
  j["sizes"] = sizes;
  j["slope_low"] = format_double(profile.slope_low);
  j["slope_high"] = format_double(profile.slope_high);
  j["relations_ok"] = profile.relations_ok;
  j["max_relation_length"] = profile.max_relation_length;
  return j;
}

Json sandwich_to_json(const SandwichReport& rep) {
  Json j;
  j["gamma_spec"] = rep.gamma_spec;
  j["C1"] = rep.c1.get_str();
  j["C2"] = rep.c2.get_str();
  j["h_minus_basis"] = lattice_to_json(rep.h_minus_lattice.lattice());
  j["h_plus_basis"] = lattice_to_json(rep.h_plus_lattice.lattice());
  j["additive_index"] = rep.additive_index.get_str();
  j["multiplicative_index"] = rep.mult_index.get_str();
  j["bound"] = rep.bound.get_str();
  j["verdict"] = rep.equality_ok && rep.bound_ok && rep.containment_ok;
  return j;
}

std::string json_to_string(const Json& j) {
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot open output file: " + path);
  out << payload;
  if (!out) throw usage_error("write failed: " + path);
}

}  // namespace nilgrowth
