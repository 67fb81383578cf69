#pragma once

#include "chroma/hypergraph.hpp"

namespace chroma {

/// Boyer-Myrvold planarity decision.
bool planarity_check(const SimpleGraph& g);

} // namespace chroma
