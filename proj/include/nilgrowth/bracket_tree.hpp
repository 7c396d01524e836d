#ifndef NILGROWTH_BRACKET_TREE_HPP
#define NILGROWTH_BRACKET_TREE_HPP

#include <functional>
#include <memory>
#include <string>

namespace nilgrowth {

struct BracketTree;
using TreePtr = std::shared_ptr<const BracketTree>;

/// Immutable bracketing tree over formal variables. Leaves carry a variable
/// index; internal nodes are Lie brackets of their children.
struct BracketTree {
  int var = -1;  // >= 0 at leaves
  TreePtr left, right;
  unsigned degree = 1;

  bool is_leaf() const { return var >= 0; }
};

TreePtr tree_leaf(unsigned var);
TreePtr tree_node(TreePtr l, TreePtr r);

/// Total order: degree first, then leaf variable, then recursively on subtrees.
int tree_cmp(const TreePtr& a, const TreePtr& b);

/// Rendering such as "[x1,[x1,x2]]"; `name` maps a variable index to its label.
std::string tree_to_string(const TreePtr& t,
                           const std::function<std::string(unsigned)>& name);

/// Default labels x1..xk.
std::string tree_to_string(const TreePtr& t);

}  // namespace nilgrowth

#endif
