#include "keyfold/common_info.hpp"

#include "keyfold/union_find.hpp"

#include <cmath>
#include <stdexcept>

namespace keyfold {

const char* var_pair_name(VarPair p) {
  switch (p) {
    case VarPair::XY: return "XY";
    case VarPair::XZ: return "XZ";
    case VarPair::YZ: return "YZ";
  }
  return "?";
}

int CommonFunction::label_of_first(int v) const {
  const auto it = first_labels.find(v);
  if (it == first_labels.end())
    throw std::out_of_range("value " + std::to_string(v) + " is not in the first-variable support");
  return it->second;
}

int CommonFunction::label_of_second(int v) const {
  const auto it = second_labels.find(v);
  if (it == second_labels.end())
    throw std::out_of_range("value " + std::to_string(v) + " is not in the second-variable support");
  return it->second;
}

std::vector<int> CommonFunction::component_ids() const {
  std::vector<int> ids;
  for (const auto& [id, p] : component_probs) ids.push_back(id);
  return ids;
}

int CommonFunction::index_of_label(int id) const {
  int i = 0;
  for (const auto& [cid, p] : component_probs) {
    if (cid == id) return i;
    ++i;
  }
  throw std::out_of_range("unknown component id " + std::to_string(id));
}

CommonFunction common_function_of_pairs(const std::map<std::pair<int, int>, Rational>& joint,
                                        VarPair tag) {
  // Dense node ids: first values then second values.
  std::map<int, int> first_node, second_node;
  for (const auto& [ab, p] : joint) {
    first_node.emplace(ab.first, 0);
    second_node.emplace(ab.second, 0);
  }
  int next = 0;
  for (auto& [v, id] : first_node) id = next++;
  for (auto& [v, id] : second_node) id = next++;

  UnionFind uf(next);
  for (const auto& [ab, p] : joint) uf.unite(first_node.at(ab.first), second_node.at(ab.second));

  // Canonical id: smallest first-variable value in each root's component.
  std::map<int, int> root_to_id;
  for (const auto& [v, node] : first_node) {
    const int root = uf.find(node);
    auto it = root_to_id.find(root);
    if (it == root_to_id.end() || v < it->second) root_to_id[root] = v;
  }

  CommonFunction cf;
  cf.pair = tag;
  for (const auto& [v, node] : first_node) cf.first_labels[v] = root_to_id.at(uf.find(node));
  for (const auto& [v, node] : second_node) cf.second_labels[v] = root_to_id.at(uf.find(node));
  for (const auto& [ab, p] : joint) cf.component_probs[cf.first_labels.at(ab.first)] += p;
  return cf;
}

CommonFunction common_function(const TripartiteDistribution& d, VarPair pair) {
  std::map<std::pair<int, int>, Rational> joint;
  for (const auto& [e, p] : d.events()) {
    switch (pair) {
      case VarPair::XY: joint[{e.x, e.y}] += p; break;
      case VarPair::XZ: joint[{e.x, e.z}] += p; break;
      case VarPair::YZ: joint[{e.y, e.z}] += p; break;
    }
  }
  return common_function_of_pairs(joint, pair);
}

std::map<int, CommonFunction> conditional_common_function(const TripartiteDistribution& d) {
  std::map<int, CommonFunction> result;
  for (const auto& [z, mass] : d.z_marginal())
    result.emplace(z, common_function_of_pairs(d.slice_conditional(z), VarPair::XY));
  return result;
}

double common_entropy(const CommonFunction& cf) {
  double h = 0.0;
  for (const auto& [id, p] : cf.component_probs) {
    const double v = to_double(p);
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

}  // namespace keyfold
