#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>

#include "plurality/aux_graph.hpp"
#include "plurality/constraint_graph.hpp"
#include "plurality/types.hpp"

namespace plurality {

enum class AdversaryVariant { Even3, Odd3, GeneralKEven, GeneralKOdd, Other };

class Adversary {
public:
    virtual ~Adversary() = default;
    virtual AnswerPartition answer(const Query& q) = 0;
    // A full coloring consistent with every answer given so far.
    virtual Coloring witness() const = 0;
    virtual std::string name() const = 0;
    virtual AdversaryVariant variant() const { return AdversaryVariant::Other; }
    virtual const AuxGraph* aux() const { return nullptr; }
    // First answer index at which the strategy abandoned its maintained
    // conditions (or fixed its coloring), -1 if that never happened.
    virtual int violation_step() const { return -1; }
};

// k=3 strategy that keeps a balanced (n even) or almost-balanced (n odd)
// two-coloring consistent for as long as it can, preferring two-plus-one
// answers that keep merged component imbalances small.  Once no such answer
// exists it fixes a witness coloring and follows it for the rest of the
// game.  The auxiliary graph records one blue edge per same-color pair and
// red (later green) edges per different-color pair, for the query-count
// accounting.
class K3Adversary : public Adversary {
public:
    K3Adversary(GameConfig cfg, bool odd);

    AnswerPartition answer(const Query& q) override;
    Coloring witness() const override;
    std::string name() const override { return odd_ ? "odd3" : "even3"; }
    AdversaryVariant variant() const override {
        return odd_ ? AdversaryVariant::Odd3 : AdversaryVariant::Even3;
    }
    const AuxGraph* aux() const override { return &aux_; }
    int violation_step() const override { return violation_step_; }

    bool conditioned() const { return phase_ == Phase::Conditioned; }
    const ConstraintGraph& constraints() const { return constraints_; }
    int third_color_ball() const { return z_; }
    // Classification of the non-query components at the moment the
    // conditions were abandoned (diagnostic).
    const std::optional<ComponentClassification>& violation_classification() const {
        return violation_classification_;
    }

private:
    enum class Phase { Conditioned, PostViolation };

    struct Candidate {
        AnswerPartition parts;
        int merged_imbalance = 0;
        bool bullet = false;  // produced by the three-p3c-ball rule
    };

    std::vector<Candidate> conditioned_candidates(const Query& q, const AuxComponents& view) const;
    bool gate(const Query& q, const AnswerPartition& cand) const;
    void enter_violation(const Query& q);
    AnswerPartition answer_from_fixed(const Query& q);
    void update_aux_conditioned(AuxGraph& aux, const Query& q, const AnswerPartition& a) const;
    void update_aux_fixed(const Query& q, const AnswerPartition& a);
    std::pair<int, Coloring> pick_third_color_ball() const;

    GameConfig cfg_;
    bool odd_ = false;
    Phase phase_ = Phase::Conditioned;
    int steps_ = 0;
    int violation_step_ = -1;
    int z_ = 0;  // designated third-color ball (odd, after violation)
    Coloring fixed_coloring_;
    ConstraintGraph constraints_;
    AuxGraph aux_;
    std::optional<ComponentClassification> violation_classification_;
};

// General query size k: grows two sets A and B capped at floor(n/2),
// answers with the induced two-part partition, and for odd n parks the
// last unseen ball as the single third-color ball once it appears.
class GeneralKAdversary : public Adversary {
public:
    explicit GeneralKAdversary(GameConfig cfg);

    AnswerPartition answer(const Query& q) override;
    Coloring witness() const override;
    std::string name() const override { return "generalk"; }
    AdversaryVariant variant() const override {
        return cfg_.n % 2 == 0 ? AdversaryVariant::GeneralKEven : AdversaryVariant::GeneralKOdd;
    }
    const AuxGraph* aux() const override { return &aux_; }
    int violation_step() const override { return fix_step_; }

private:
    void place_new_ball(int ball);
    std::vector<int> side_in_query(const Query& q, int side) const;

    GameConfig cfg_;
    int cap_ = 0;                // floor(n/2)
    std::vector<int> side_of_;   // 0 unplaced, 1 A, 2 B
    std::vector<char> seen_;
    int unseen_ = 0;
    int steps_ = 0;
    bool fixed_ = false;
    int fix_step_ = -1;
    int x_ = 0;  // third-color ball (odd n)
    Coloring fixed_coloring_;
    ConstraintGraph constraints_;
    AuxGraph aux_;
};

// Answers according to one fixed hidden coloring.
class FixedColoringAdversary : public Adversary {
public:
    FixedColoringAdversary(GameConfig cfg, Coloring coloring);

    AnswerPartition answer(const Query& q) override;
    Coloring witness() const override { return coloring_; }
    std::string name() const override { return "fixed"; }

private:
    GameConfig cfg_;
    Coloring coloring_;
};

// Picks a random consistent answer per query (seeded, bounded search),
// falling back to the partition induced by its current witness coloring.
class RandomConsistentAdversary : public Adversary {
public:
    RandomConsistentAdversary(GameConfig cfg, std::uint64_t seed);

    AnswerPartition answer(const Query& q) override;
    Coloring witness() const override { return witness_; }
    std::string name() const override { return "random-consistent"; }

private:
    GameConfig cfg_;
    std::mt19937_64 rng_;
    Coloring witness_;
    ConstraintGraph constraints_;
};

// All partitions of the query into at most 3 unlabeled nonempty parts.
std::vector<AnswerPartition> all_answer_partitions(const Query& q);

// Bounded backtracking for a consistent 3-coloring: nullopt when the node
// budget ran out, otherwise an empty coloring for "unsatisfiable" or a
// witness.  Used by the random adversary to keep per-query work bounded.
std::optional<Coloring> bounded_consistent_coloring(const ConstraintGraph& g, int node_budget);

std::unique_ptr<Adversary> make_adversary(const std::string& name, GameConfig cfg,
                                          std::uint64_t seed);

}  // namespace plurality
