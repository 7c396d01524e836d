#include "nilgrowth/free_algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace nilgrowth {

FreePoly FreePoly::one(unsigned letters, unsigned max_degree) {
  FreePoly p(letters, max_degree);
  p.add_term("", Rat(1));
  return p;
}

FreePoly FreePoly::generator(unsigned letter, unsigned letters,
                             unsigned max_degree) {
  assert(letter < letters);
  FreePoly p(letters, max_degree);
  p.add_term(std::string(1, static_cast<char>(letter)), Rat(1));
  return p;
}

void FreePoly::add_term(const std::string& word, const Rat& coeff) {
  if (coeff == 0 || word.size() > max_degree_) return;
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(word, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
  FreePoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
  FreePoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
  FreePoly r(letters_, max_degree_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      if (wa.size() + wb.size() > max_degree_) continue;
      r.add_term(wa + wb, ca * cb);
    }
  }
  return r;
}

FreePoly FreePoly::scaled(const Rat& c) const {
  FreePoly r(letters_, max_degree_);
  if (c == 0) return r;
  for (const auto& [w, q] : terms_) r.terms_.emplace(w, c * q);
  return r;
}

FreePoly FreePoly::component(unsigned degree) const {
  FreePoly r(letters_, max_degree_);
  for (const auto& [w, c] : terms_)
    if (w.size() == degree) r.terms_.emplace(w, c);
  return r;
}

FreePoly FreePoly::exp(const FreePoly& p) {
  if (p.terms_.count(""))
    throw std::invalid_argument("exp of series with constant term");
  FreePoly acc = one(p.letters_, p.max_degree_);
  FreePoly inc = one(p.letters_, p.max_degree_);
  for (unsigned i = 1; i <= p.max_degree_; ++i) {
    inc = inc * p;
    inc = inc.scaled(rat(1, static_cast<long>(i)));
    if (inc.is_zero()) break;
    acc = acc + inc;
  }
  return acc;
}

FreePoly FreePoly::log(const FreePoly& q) {
  auto it = q.terms_.find("");
  if (it == q.terms_.end() || it->second != 1)
    throw std::invalid_argument("log of series without unit constant term");
  FreePoly u = q;
  u.add_term("", Rat(-1));  // u = q - 1, degree >= 1
  // log(1+u) = sum (-1)^{i+1} u^i / i
  FreePoly acc = zero(q.letters_, q.max_degree_);
  FreePoly pw = one(q.letters_, q.max_degree_);
  for (unsigned i = 1; i <= q.max_degree_; ++i) {
    pw = pw * u;
    if (pw.is_zero()) break;
    Rat c = rat(i % 2 == 1 ? 1 : -1, static_cast<long>(i));
    acc = acc + pw.scaled(c);
  }
  return acc;
}

}  // namespace nilgrowth
