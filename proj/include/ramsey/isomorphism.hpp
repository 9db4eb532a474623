#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Returns mapping[v] = image of v in h, or nullopt if g and h are not
/// isomorphic.
///
/// Colour refinement (degree, then multiset of neighbour colours) is run
/// on both graphs jointly; the search individualises one vertex of the
/// smallest non-trivial cell at a time and backtracks when the refined
/// colourings stop matching.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

/// True when mapping is a bijection carrying the edges of g exactly onto h.
bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& mapping);

} // namespace ramsey
