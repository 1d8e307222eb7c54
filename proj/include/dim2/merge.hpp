#pragma once

#include <cstdint>
#include <vector>

#include "dim2/digraph.hpp"

namespace dim2 {

// Linear extension of both g and the orientation of complement(tc(g))
// described by l_comp; Kahn's scheme with a min-heap keyed by l_comp rank.
LinearOrder merge(const Digraph& g, const LinearOrder& l_comp);

// countdown(v) = rank_h(v) minus the number of U(g)-neighbors of v with
// smaller rank in l_h.
std::vector<std::uint32_t> initial_countdown(const Digraph& g, const LinearOrder& l_h);

// The unique linear order describing G_H together with tc(H), where H is the
// orientation of complement(g)'s pairs described by l_h. Validates that g is
// transitive; complement_merge_unchecked skips that check.
LinearOrder complement_merge(const Digraph& g, const LinearOrder& l_h);
LinearOrder complement_merge_unchecked(const Digraph& g, const LinearOrder& l_h);

// Same, but pool ties are broken by an explicit linearization of g instead of
// the default topological_order(g). The result is identical for any valid
// tie_break; exposed so tests can exercise that independence.
LinearOrder complement_merge_unchecked(const Digraph& g, const LinearOrder& l_h,
                                       const LinearOrder& tie_break);

} // namespace dim2
