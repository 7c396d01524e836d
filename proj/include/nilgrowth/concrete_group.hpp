#ifndef NILGROWTH_CONCRETE_GROUP_HPP
#define NILGROWTH_CONCRETE_GROUP_HPP

#include <optional>
#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/heis_group.hpp"
#include "nilgrowth/rational.hpp"

namespace nilgrowth {

/// Finitely generated concrete group with a word metric: a finite abelian
/// product (0 modulus = a Z factor), the discrete Heisenberg group, or its
/// mod-m quotient. Elements are canonical integer coordinate vectors.
class ConcreteGroup {
 public:
  enum class Kind { FiniteAbelian, HeisenbergZ, HeisenbergMod };
  using El = std::vector<long long>;

  static ConcreteGroup finite_abelian(std::vector<long long> moduli);
  static ConcreteGroup finite_abelian(std::vector<long long> moduli,
                                      std::vector<El> generators);
  static ConcreteGroup heisenberg_z();
  static ConcreteGroup heisenberg_z(std::vector<El> generators);
  static ConcreteGroup heisenberg_mod(long long m);

  Kind kind() const { return kind_; }
  const std::vector<long long>& moduli() const { return moduli_; }
  long long heis_modulus() const { return heis_mod_; }
  bool standard_generators() const { return standard_gens_; }
  size_t coords() const;

  El identity() const;
  El canon(El v) const;
  El mul(const El& x, const El& y) const;
  El inv(const El& x) const;
  /// S with identity and inverses adjoined, deduplicated, sorted.
  const std::vector<El>& sbar() const { return sbar_; }

  /// Exact ball cardinality (interval DP for the Heisenberg group over Z).
  Int ball_size(unsigned r, const Budget& budget = Budget::with_env()) const;
  /// Explicit ball in canonical order.
  std::vector<El> ball_elements(unsigned r,
                                const Budget& budget = Budget::with_env()) const;

  /// Word length in the finite abelian case with standard generators:
  /// sum_i min(|x_i|, n_i - |x_i|) in closed form.
  long long abelian_word_length(const El& v) const;

  /// Every element (finite groups only).
  std::vector<El> all_elements(const Budget& budget = Budget::with_env()) const;

 private:
  ConcreteGroup() = default;
  void finish_generators(std::vector<El> gens);

  Kind kind_ = Kind::FiniteAbelian;
  std::vector<long long> moduli_;
  long long heis_mod_ = 0;
  bool standard_gens_ = true;
  std::vector<El> sbar_;
};

struct GrowthProfile {
  std::vector<Int> sizes;                         // Gr(0..r_max)
  std::vector<std::pair<unsigned, Rat>> k_ratios; // (r, Gr(3r)/Gr(r))
  std::optional<Rat> min_k;
};

GrowthProfile growth_profile(const ConcreteGroup& g, unsigned r_max,
                             const Budget& budget = Budget::with_env());

}  // namespace nilgrowth

#endif
