#pragma once

#include "plurality/constraint_graph.hpp"
#include "plurality/types.hpp"

namespace plurality {

// Decides whether the game state is solved.
//
// Plurality goal: NoPlurality when no consistent coloring has a plurality
// ball; PluralityBall(b) when some ball b is a plurality ball in every
// consistent coloring (smallest such b); otherwise Unresolved.  A state
// whose consistent set is empty resolves to NoPlurality.
//
// Partition goal: PartitionKnown when all consistent colorings agree up to
// permuting the color names.
//
// Uses targeted backtracking searches with early exit rather than full
// enumeration.
Resolution resolution(const ConstraintGraph& g, Goal goal);

// Search helpers used by resolution(); exposed for the engine's
// declaration checks.

// Some consistent coloring containing a plurality ball.
std::optional<Coloring> find_plurality_witness(const ConstraintGraph& g);
// Some consistent coloring without a plurality ball.
std::optional<Coloring> find_no_plurality_witness(const ConstraintGraph& g);
// Some consistent coloring in which `ball` is not a plurality ball.
std::optional<Coloring> find_coloring_ball_not_plurality(const ConstraintGraph& g, int ball);
// Consistent colorings up to color permutation (canonical labeling), at most `limit`.
std::vector<Coloring> enumerate_consistent_canonical(const ConstraintGraph& g, std::size_t limit);

}  // namespace plurality
