#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "plurality/types.hpp"

namespace plurality {

// Accumulated same-color / different-color constraints implied by the
// answers of a game.  Same-color balls are merged in a union-find whose
// representative is always the smallest ball of the class, so the stored
// form is independent of the order the answers arrived in.
class ConstraintGraph {
public:
    ConstraintGraph() = default;
    explicit ConstraintGraph(int n);

    int n() const { return n_; }
    bool contradictory() const { return contradictory_; }
    const std::set<std::pair<int, int>>& uneq() const { return uneq_; }
    bool touched(int ball) const { return touched_[ball]; }
    int touched_count() const { return touched_count_; }

    int find(int ball) const;
    bool same_class(int a, int b) const { return find(a) == find(b); }
    bool marked_uneq(int a, int b) const;
    std::vector<int> class_of(int ball) const;

    // Merges the balls of each part and records one different-color
    // constraint per pair of parts.  Throws on a malformed partition.
    void apply_answer(const Query& q, const AnswerPartition& a);

    // True when `a` adds no information to this graph (all merges and
    // different-color pairs already implied and every ball touched).
    bool answer_is_noop(const Query& q, const AnswerPartition& a) const;

    bool operator==(const ConstraintGraph& o) const;

    // --- quotient view -------------------------------------------------
    // Nodes are the eq-classes ordered by smallest member; edges are the
    // different-color constraints.
    struct Quotient {
        int n = 0;
        std::vector<int> reps;                    // node -> representative ball
        std::vector<int> weight;                  // node -> number of balls
        std::vector<std::vector<int>> adj;        // node -> uneq-adjacent nodes
        std::vector<int> node_of_ball;            // ball -> node index
        std::vector<std::vector<int>> members;    // node -> balls
    };
    Quotient quotient() const;

private:
    void merge(int a, int b);
    void add_uneq(int a, int b);

    int n_ = 0;
    mutable std::vector<int> parent_;
    std::vector<char> touched_;
    int touched_count_ = 0;
    std::set<std::pair<int, int>> uneq_;  // canonical pairs of representatives, first < second
    bool contradictory_ = false;
};

// All 3-colorings consistent with g, in lexicographic order of the quotient
// node color vector, expanded back to full ball colorings.  Stops after
// `limit` colorings; empty when g is contradictory or unsatisfiable.
std::vector<Coloring> enumerate_consistent(const ConstraintGraph& g, std::size_t limit);

// True iff at least one consistent 3-coloring exists.
bool has_consistent_coloring(const ConstraintGraph& g);

// Decides whether some 2-coloring with class sizes (s1, s2) satisfies all
// constraints of g.  Every constraint component is bipartitioned (failure
// when a component is not 2-colorable) and feasibility reduces to a signed
// imbalance subset-sum over components.  `forced` pins a ball to the class
// of size max(s1,s2) (flag true) or min(s1,s2) (flag false).
struct ForcedBall {
    int ball = 0;
    bool on_larger = true;
};
bool exists_two_coloring(const ConstraintGraph& g, int s1, int s2,
                         std::optional<ForcedBall> forced = std::nullopt);

// Reusable form of the feasibility test above: build once, then query
// several forced placements against one target class size.
class TwoColoringFeasibility {
public:
    explicit TwoColoringFeasibility(const ConstraintGraph& g);

    bool bipartite() const { return bipartite_; }
    int component_of(int ball) const { return comp_of_ball_[ball]; }
    int side_of(int ball) const { return side_of_ball_[ball]; }
    int component_count() const { return static_cast<int>(side_weight_.size()); }
    // weight of side s (0/1) of component c
    int side_weight(int c, int s) const { return side_weight_[c][s]; }

    // Is there an assignment of component sides to the two classes giving a
    // "large" class of exactly `target` balls?
    bool feasible(int target) const;
    // Same, with component c contributing exactly `contribution` balls to
    // the large class (i.e. one side of c pinned there).
    bool feasible_with(int c, int contribution, int target) const;

private:
    using Bits = std::vector<std::uint64_t>;
    static void bit_set(Bits& b, int i) { b[i >> 6] |= 1ull << (i & 63); }
    static bool bit_test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
    Bits shifted_or(const Bits& b, int w0, int w1) const;

    int n_ = 0;
    bool bipartite_ = true;
    std::vector<int> comp_of_ball_, side_of_ball_;
    std::vector<std::array<int, 2>> side_weight_;
    std::vector<Bits> prefix_, suffix_;  // achievable large-class sums
};

// Lexicographically smallest 2-coloring (colors 1=large class, 2=small
// class) with class sizes (s1, s2), s1 >= s2, consistent with g; `forced`
// optionally pins a ball into the large class.  Empty optional when
// infeasible.
std::optional<Coloring> lex_min_two_coloring(const ConstraintGraph& g, int s1, int s2,
                                             std::optional<int> forced_large = std::nullopt);

}  // namespace plurality
