#include "nilgrowth/hall_basis.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

namespace {

int moebius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

long witt_dimension(unsigned k, unsigned m) {
  assert(m >= 1);
  long sum = 0;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    long pw = 1;
    for (unsigned e = 0; e < m / d; ++e) pw *= static_cast<long>(k);
    sum += moebius(d) * pw;
  }
  assert(sum % static_cast<long>(m) == 0);
  return sum / static_cast<long>(m);
}

std::shared_ptr<const HallBasis> HallBasis::make(unsigned k, unsigned s,
                                                 const HallLimits& limits) {
  if (k < 1) throw usage_error("hall basis needs at least one generator");
  if (s < 1) throw usage_error("hall basis needs step >= 1");
  if (k > limits.max_generators)
    throw resource_error("generator count " + std::to_string(k) +
                         " exceeds ceiling " +
                         std::to_string(limits.max_generators));
  if (s > limits.max_step)
    throw resource_error("step " + std::to_string(s) + " exceeds ceiling " +
                         std::to_string(limits.max_step));
  size_t dim = 0;
  for (unsigned m = 1; m <= s; ++m) dim += static_cast<size_t>(witt_dimension(k, m));
  if (dim > limits.max_dimension)
    throw resource_error("algebra dimension " + std::to_string(dim) +
                         " exceeds ceiling " +
                         std::to_string(limits.max_dimension));

  auto basis = std::shared_ptr<HallBasis>(new HallBasis());
  basis->k_ = k;
  basis->s_ = s;
  basis->id_ = "free(k=" + std::to_string(k) + ",s=" + std::to_string(s) + ")";
  basis->build_elements(limits);
  basis->build_solvers();
  basis->build_structure();
  basis->build_universal_tables();
  return basis;
}

void HallBasis::build_elements(const HallLimits&) {
  // Hall set: a generator, or [a,b] with a < b and (b a leaf or left(b) <= a).
  std::vector<std::vector<TreePtr>> by_degree(s_ + 1);
  for (unsigned v = 0; v < k_; ++v) by_degree[1].push_back(tree_leaf(v));
  for (unsigned m = 2; m <= s_; ++m) {
    std::vector<TreePtr> out;
    for (unsigned da = 1; 2 * da <= m; ++da) {
      unsigned db = m - da;
      for (const TreePtr& a : by_degree[da]) {
        for (const TreePtr& b : by_degree[db]) {
          if (tree_cmp(a, b) >= 0) continue;
          if (!b->is_leaf() && tree_cmp(b->left, a) > 0) continue;
          out.push_back(tree_node(a, b));
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const TreePtr& x, const TreePtr& y) { return tree_cmp(x, y) < 0; });
    by_degree[m] = std::move(out);
  }

  degree_first_.assign(s_ + 1, 0);
  for (unsigned m = 1; m <= s_; ++m) {
    degree_first_[m] = elements_.size();
    assert(static_cast<long>(by_degree[m].size()) == witt_dimension(k_, m));
    for (TreePtr& t : by_degree[m]) elements_.push_back({std::move(t), m});
  }
}

std::pair<size_t, size_t> HallBasis::degree_range(unsigned d) const {
  assert(d >= 1 && d <= s_);
  size_t first = degree_first_[d];
  size_t last = (d == s_) ? elements_.size() : degree_first_[d + 1];
  return {first, last};
}

FreePoly HallBasis::expand_tree(const TreePtr& t) const {
  if (t->is_leaf())
    return FreePoly::generator(static_cast<unsigned>(t->var), k_, s_);
  FreePoly l = expand_tree(t->left);
  FreePoly r = expand_tree(t->right);
  return l * r - r * l;
}

void HallBasis::build_solvers() {
  solvers_.assign(s_ + 1, DegreeSolver{});
  std::vector<FreePoly> expansions;
  expansions.reserve(elements_.size());
  for (const Element& e : elements_) expansions.push_back(expand_tree(e.tree));

  for (unsigned m = 1; m <= s_; ++m) {
    auto [first, last] = degree_range(m);
    DegreeSolver& sv = solvers_[m];
    sv.first_element = first;
    for (size_t i = first; i < last; ++i)
      for (const auto& [w, c] : expansions[i].terms())
        sv.word_index.emplace(w, 0);
    size_t wi = 0;
    for (auto& [w, idx] : sv.word_index) idx = wi++;

    const size_t rows = last - first, cols = sv.word_index.size();
    RatMat mat = mat_zero(rows, cols);
    for (size_t i = first; i < last; ++i)
      for (const auto& [w, c] : expansions[i].terms())
        mat[i - first][sv.word_index.at(w)] = c;

    // Row-reduce tracking the transform so later projections are one pass.
    sv.rref = mat;
    sv.transform = mat_identity(rows);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
      size_t p = r;
      while (p < rows && sv.rref[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(sv.rref[p], sv.rref[r]);
      std::swap(sv.transform[p], sv.transform[r]);
      Rat inv = sv.rref[r][c];
      for (auto& q : sv.rref[r]) q /= inv;
      for (auto& q : sv.transform[r]) q /= inv;
      for (size_t i = 0; i < rows; ++i) {
        if (i == r || sv.rref[i][c] == 0) continue;
        Rat f = sv.rref[i][c];
        for (size_t j = 0; j < cols; ++j) sv.rref[i][j] -= f * sv.rref[r][j];
        for (size_t j = 0; j < rows; ++j)
          sv.transform[i][j] -= f * sv.transform[r][j];
      }
      sv.pivots.push_back(c);
      ++r;
    }
    // Hall expansions are independent, so every row is a pivot row.
    assert(sv.pivots.size() == rows);
  }
}

RatVec HallBasis::project_degree(const FreePoly& homogeneous,
                                 unsigned degree) const {
  assert(degree >= 1 && degree <= s_);
  const DegreeSolver& sv = solvers_[degree];
  const size_t rows = sv.pivots.size(), cols = sv.word_index.size();
  RatVec b(cols, Rat(0));
  for (const auto& [w, c] : homogeneous.terms()) {
    if (w.size() != degree)
      throw usage_error("polynomial is not homogeneous of degree " +
                        std::to_string(degree));
    auto it = sv.word_index.find(w);
    if (it == sv.word_index.end())
      throw usage_error("polynomial is not a Lie element (stray word)");
    b[it->second] = c;
  }
  RatVec y(rows, Rat(0));
  for (size_t t = 0; t < rows; ++t) y[t] = b[sv.pivots[t]];
  // Residual must vanish exactly; anything else is not in the Lie span.
  for (size_t j = 0; j < cols; ++j) {
    Rat acc(0);
    for (size_t t = 0; t < rows; ++t)
      if (sv.rref[t][j] != 0) acc += y[t] * sv.rref[t][j];
    if (acc != b[j])
      throw usage_error("polynomial is not a Lie element (projection residual)");
  }
  // x = y * transform (row vector times matrix)
  RatVec coords(dim(), Rat(0));
  for (size_t j = 0; j < rows; ++j) {
    Rat acc(0);
    for (size_t t = 0; t < rows; ++t) acc += y[t] * sv.transform[t][j];
    coords[sv.first_element + j] = acc;
  }
  return coords;
}

void HallBasis::build_structure() {
  std::vector<FreePoly> expansions;
  expansions.reserve(elements_.size());
  for (const Element& e : elements_) expansions.push_back(expand_tree(e.tree));

  for (size_t i = 0; i < elements_.size(); ++i) {
    for (size_t j = i + 1; j < elements_.size(); ++j) {
      unsigned d = elements_[i].degree + elements_[j].degree;
      if (d > s_) continue;
      FreePoly comm = expansions[i] * expansions[j] - expansions[j] * expansions[i];
      RatVec coords = project_degree(comm, d);
      SparseVec sparse;
      for (size_t t = 0; t < coords.size(); ++t)
        if (coords[t] != 0) sparse.emplace_back(t, coords[t]);
      structure_.emplace(std::make_pair(i, j), std::move(sparse));
    }
  }
}

SparseVec HallBasis::structure(size_t i, size_t j) const {
  if (i == j) return {};
  if (i > j) {
    SparseVec v = structure(j, i);
    for (auto& [idx, c] : v) c = -c;
    return v;
  }
  auto it = structure_.find({i, j});
  if (it == structure_.end()) return {};
  return it->second;
}

RatVec HallBasis::bracket(const RatVec& x, const RatVec& y) const {
  assert(x.size() == dim() && y.size() == dim());
  RatVec out(dim(), Rat(0));
  for (const auto& [key, row] : structure_) {
    auto [i, j] = key;
    Rat c = x[i] * y[j] - x[j] * y[i];
    if (c == 0) continue;
    for (const auto& [t, q] : row) out[t] += c * q;
  }
  return out;
}

RatVec HallBasis::eval_tree(const TreePtr& t, const RatVec& x,
                            const RatVec& y) const {
  if (t->is_leaf()) return t->var == 0 ? x : y;
  return bracket(eval_tree(t->left, x, y), eval_tree(t->right, x, y));
}

RatVec HallBasis::bch(const RatVec& x, const RatVec& y) const {
  assert(x.size() == dim() && y.size() == dim());
  RatVec z(dim(), Rat(0));
  for (const LiePolynomial& level : bch_terms_) {
    for (const LiePolynomialTerm& term : level) {
      RatVec v = eval_tree(term.monomial, x, y);
      for (size_t i = 0; i < z.size(); ++i) z[i] += term.coefficient * v[i];
    }
  }
  return z;
}

namespace {

struct UniversalTables {
  std::vector<LiePolynomial> bch;         // degrees 1..s
  std::vector<LiePolynomial> zassenhaus;  // degrees 2..s
};

std::mutex g_tables_mutex;
std::map<unsigned, std::shared_ptr<const UniversalTables>> g_tables;

LiePolynomial terms_from_coords(const HallBasis& two, const RatVec& coords,
                                unsigned degree) {
  LiePolynomial out;
  auto [first, last] = two.degree_range(degree);
  for (size_t i = first; i < last; ++i)
    if (coords[i] != 0)
      out.push_back({coords[i], two.elements()[i].tree, degree});
  return out;
}

std::shared_ptr<const UniversalTables> compute_tables(const HallBasis& two) {
  const unsigned s = two.step();
  auto tables = std::make_shared<UniversalTables>();

  FreePoly x = FreePoly::generator(0, 2, s);
  FreePoly y = FreePoly::generator(1, 2, s);
  FreePoly z = FreePoly::log(FreePoly::exp(x) * FreePoly::exp(y));
  for (unsigned m = 1; m <= s; ++m)
    tables->bch.push_back(
        terms_from_coords(two, two.project_degree(z.component(m), m), m));

  // Peel Zassenhaus corrections: exp(X+Y) = exp(X) exp(Y) exp(L2) ... exp(Ls).
  FreePoly rem = FreePoly::exp(y.scaled(-1)) * FreePoly::exp(x.scaled(-1)) *
                 FreePoly::exp(x + y);
  for (unsigned m = 2; m <= s; ++m) {
    FreePoly lm = FreePoly::log(rem).component(m);
    tables->zassenhaus.push_back(
        terms_from_coords(two, two.project_degree(lm, m), m));
    rem = FreePoly::exp(lm.scaled(-1)) * rem;
  }
  return tables;
}

}  // namespace

void HallBasis::build_universal_tables() {
  std::shared_ptr<const UniversalTables> tables;
  {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto it = g_tables.find(s_);
    if (it != g_tables.end()) tables = it->second;
  }
  if (!tables) {
    if (k_ == 2) {
      tables = compute_tables(*this);
    } else {
      auto two = HallBasis::make(2, s_);
      // make(2, s) populated the cache
      std::lock_guard<std::mutex> lock(g_tables_mutex);
      tables = g_tables.at(s_);
    }
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    g_tables.emplace(s_, tables);
  }
  bch_terms_ = tables->bch;
  zassenhaus_terms_ = tables->zassenhaus;
}

}  // namespace nilgrowth
