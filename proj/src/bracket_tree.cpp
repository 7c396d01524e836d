#include "nilgrowth/bracket_tree.hpp"

#include <cassert>

namespace nilgrowth {

TreePtr tree_leaf(unsigned var) {
  auto t = std::make_shared<BracketTree>();
  t->var = static_cast<int>(var);
  t->degree = 1;
  return t;
}

TreePtr tree_node(TreePtr l, TreePtr r) {
  assert(l && r);
  auto t = std::make_shared<BracketTree>();
  t->left = std::move(l);
  t->right = std::move(r);
  t->degree = t->left->degree + t->right->degree;
  return t;
}

int tree_cmp(const TreePtr& a, const TreePtr& b) {
  if (a->degree != b->degree) return a->degree < b->degree ? -1 : 1;
  if (a->is_leaf()) return a->var == b->var ? 0 : (a->var < b->var ? -1 : 1);
  if (int c = tree_cmp(a->left, b->left)) return c;
  return tree_cmp(a->right, b->right);
}

std::string tree_to_string(const TreePtr& t,
                           const std::function<std::string(unsigned)>& name) {
  if (t->is_leaf()) return name(static_cast<unsigned>(t->var));
  return "[" + tree_to_string(t->left, name) + "," +
         tree_to_string(t->right, name) + "]";
}

std::string tree_to_string(const TreePtr& t) {
  return tree_to_string(
      t, [](unsigned v) { return "x" + std::to_string(v + 1); });
}

}  // namespace nilgrowth
