#ifndef NILGROWTH_FREE_ALGEBRA_HPP
#define NILGROWTH_FREE_ALGEBRA_HPP

#include <map>
#include <string>

#include "nilgrowth/rational.hpp"

namespace nilgrowth {

/// Polynomial in the free associative algebra over Q on letters 0..k-1,
/// truncated at word length `max_degree`. Words are byte strings.
class FreePoly {
 public:
  FreePoly(unsigned letters, unsigned max_degree)
      : letters_(letters), max_degree_(max_degree) {}

  static FreePoly zero(unsigned letters, unsigned max_degree) {
    return FreePoly(letters, max_degree);
  }
  static FreePoly one(unsigned letters, unsigned max_degree);
  static FreePoly generator(unsigned letter, unsigned letters, unsigned max_degree);

  void add_term(const std::string& word, const Rat& coeff);

  FreePoly operator+(const FreePoly& o) const;
  FreePoly operator-(const FreePoly& o) const;
  FreePoly operator*(const FreePoly& o) const;
  FreePoly scaled(const Rat& c) const;

  bool is_zero() const { return terms_.empty(); }
  unsigned letters() const { return letters_; }
  unsigned max_degree() const { return max_degree_; }

  /// Homogeneous component of the given word length.
  FreePoly component(unsigned degree) const;

  const std::map<std::string, Rat>& terms() const { return terms_; }

  /// exp(p) truncated; requires p to have no constant term.
  static FreePoly exp(const FreePoly& p);
  /// log(q) truncated; requires q = 1 + (terms of degree >= 1).
  static FreePoly log(const FreePoly& q);

 private:
  unsigned letters_;
  unsigned max_degree_;
  std::map<std::string, Rat> terms_;  // word -> coefficient, no zero entries
};

}  // namespace nilgrowth

#endif
