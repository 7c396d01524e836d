#ifndef NILGROWTH_SUITES_HPP
#define NILGROWTH_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/report.hpp"

namespace nilgrowth {

/// One verification suite outcome: a pass flag, a one-line detail, a JSON
/// summary, and an optional CSV payload. CSV headers record the PRNG name
/// and seed so randomized runs stay reproducible.
struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  Json summary;
  std::string csv;
};

SuiteResult suite_bch(std::uint64_t seed, unsigned trials, const Budget& b);
SuiteResult suite_heisenberg(std::uint64_t seed, const Budget& b);
SuiteResult suite_minkowski(std::uint64_t seed, unsigned trials, unsigned dmin,
                            unsigned dmax, const Budget& b);
SuiteResult suite_exploration(std::uint64_t seed, unsigned trials,
                              const Budget& b);
SuiteResult suite_sandwich(const Budget& b);
SuiteResult suite_indices(std::uint64_t seed, unsigned trials, const Budget& b);
SuiteResult suite_folner(const Budget& b);
SuiteResult suite_relations(const Budget& b);
SuiteResult suite_scales(std::uint64_t seed, unsigned trials, const Budget& b);
SuiteResult suite_box_growth(unsigned n_max, const Budget& b);
SuiteResult suite_lemmas(const Budget& b);

/// The acceptance set at its contractual sizes, in order.
std::vector<SuiteResult> run_acceptance(std::uint64_t seed, const Budget& b);

/// Runs one suite by name at its default size; usage_error for unknown names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      unsigned trials, unsigned dmin, unsigned dmax,
                      const Budget& b);

}  // namespace nilgrowth

#endif
