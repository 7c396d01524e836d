#include "nilgrowth/heis_models.hpp"

#include "nilgrowth/heisenberg.hpp"

namespace nilgrowth {

RatVec heis_log_coords(const HeisEl& g) {
  Rat a(g.a), b(g.b), c(g.c);
  return RatVec{a, b, c - a * b / 2};
}

std::optional<HeisEl> heis_from_log_coords(const RatVec& v) {
  if (v.size() != 3) return std::nullopt;
  Rat a = v[0], b = v[1];
  Rat c = v[2] + a * b / 2;
  if (a.get_den() != 1 || b.get_den() != 1 || c.get_den() != 1)
    return std::nullopt;
  return HeisEl{a.get_num(), b.get_num(), c.get_num()};
}

GroupModel heis_subgroup_model(const HeisenbergSubgroup& h,
                               const std::string& name) {
  GroupModel g;
  g.algebra = heisenberg_basis();
  for (const HeisEl& gen : h.canonical_generators())
    g.generators.push_back(heis_log_coords(gen));
  g.member = [h](const RatVec& v) {
    auto m = heis_from_log_coords(v);
    return m && h.member(*m);
  };
  g.name = name;
  return g;
}

GroupModel integer_heisenberg_model() {
  GroupModel g;
  g.algebra = heisenberg_basis();
  g.generators = {RatVec{Rat(1), Rat(0), Rat(0)},
                  RatVec{Rat(0), Rat(1), Rat(0)}};
  g.member = [](const RatVec& v) {
    return heis_from_log_coords(v).has_value();
  };
  g.name = "H(Z)";
  return g;
}

}  // namespace nilgrowth
