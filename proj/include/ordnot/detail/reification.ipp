#pragma once

#include <string>

#include "ordnot/error.hpp"

namespace ordnot {

template <typename Value, typename Less>
ReificationResult check_reification(const BadSeqTree& tree, const std::vector<Value>& values,
                                    bool strict, Less less) {
  if (values.size() != tree.size())
    throw DomainError("reification map has " + std::to_string(values.size()) +
                      " values for a tree of " + std::to_string(tree.size()) + " nodes");
  for (std::size_t node = 1; node < tree.size(); ++node) {
    const std::size_t up = *tree.parent(node);
    const bool holds = strict ? less(values[node], values[up]) : !less(values[up], values[node]);
    if (!holds) return {false, std::make_pair(node, up)};
  }
  return {};
}

}  // namespace ordnot
