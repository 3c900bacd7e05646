#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plurality {

// Balls are indexed 1..n everywhere; colors are 1..3.
constexpr int kNumColors = 3;

struct GameConfig {
    int n = 0;
    int k = 0;

    void validate() const {
        if (k < 2) throw std::invalid_argument("query size k must be >= 2");
        if (n < k) throw std::invalid_argument("ball count n must be >= k");
    }
};

// colors[b] for b in 1..n; colors[0] is unused and holds 0.
using Coloring = std::vector<int>;

inline Coloring make_coloring(std::initializer_list<int> colors) {
    Coloring c;
    c.reserve(colors.size() + 1);
    c.push_back(0);
    c.insert(c.end(), colors.begin(), colors.end());
    return c;
}

inline int coloring_size(const Coloring& c) { return static_cast<int>(c.size()) - 1; }

inline void validate_coloring(const Coloring& c, int n) {
    if (coloring_size(c) != n) throw std::invalid_argument("coloring has wrong length");
    for (int b = 1; b <= n; ++b)
        if (c[b] < 1 || c[b] > kNumColors) throw std::invalid_argument("coloring entry out of range");
}

struct Query {
    std::vector<int> balls;  // sorted ascending, distinct

    Query() = default;
    explicit Query(std::vector<int> b) : balls(std::move(b)) {
        std::sort(balls.begin(), balls.end());
    }

    int size() const { return static_cast<int>(balls.size()); }

    bool contains(int ball) const {
        return std::binary_search(balls.begin(), balls.end(), ball);
    }

    void validate(const GameConfig& cfg) const {
        if (size() != cfg.k) throw std::invalid_argument("query has wrong size");
        for (int b : balls)
            if (b < 1 || b > cfg.n) throw std::invalid_argument("query ball out of range");
        for (size_t i = 1; i < balls.size(); ++i)
            if (balls[i] == balls[i - 1]) throw std::invalid_argument("query balls not distinct");
    }

    bool operator==(const Query& o) const { return balls == o.balls; }
};

// An unlabeled partition of a query into color classes: 1..3 nonempty
// disjoint parts covering the query.  Stored in canonical form: each part
// sorted ascending, parts ordered by (size descending, then contents).
struct AnswerPartition {
    std::vector<std::vector<int>> parts;

    AnswerPartition() = default;
    explicit AnswerPartition(std::vector<std::vector<int>> p) : parts(std::move(p)) {
        canonicalize();
    }

    void canonicalize() {
        for (auto& part : parts) std::sort(part.begin(), part.end());
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
    }

    // Throws if this is not a partition of q into 1..3 nonempty parts.
    void validate(const Query& q) const {
        if (parts.empty() || parts.size() > kNumColors)
            throw std::invalid_argument("answer must have 1..3 parts");
        std::vector<int> all;
        for (const auto& part : parts) {
            if (part.empty()) throw std::invalid_argument("answer part is empty");
            all.insert(all.end(), part.begin(), part.end());
        }
        std::sort(all.begin(), all.end());
        if (all != q.balls) throw std::invalid_argument("answer does not partition the query");
    }

    int part_of(int ball) const {
        for (size_t i = 0; i < parts.size(); ++i)
            for (int b : parts[i])
                if (b == ball) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const AnswerPartition& o) const { return parts == o.parts; }
    bool operator<(const AnswerPartition& o) const { return parts < o.parts; }
};

// Partition of q induced by a full coloring.
inline AnswerPartition answer_from_coloring(const Query& q, const Coloring& coloring) {
    std::vector<std::vector<int>> by_color(kNumColors + 1);
    for (int b : q.balls) by_color[coloring[b]].push_back(b);
    std::vector<std::vector<int>> parts;
    for (int c = 1; c <= kNumColors; ++c)
        if (!by_color[c].empty()) parts.push_back(std::move(by_color[c]));
    return AnswerPartition(std::move(parts));
}

struct PluralityStatus {
    bool has_plurality = false;
    std::vector<int> balls;  // all balls of the strictly largest class, ascending
};

// Returns the set of plurality balls (members of the strictly largest color
// class), or has_plurality=false when two classes tie for the maximum.
inline PluralityStatus plurality_status(const Coloring& coloring) {
    int counts[kNumColors + 1] = {0, 0, 0, 0};
    int n = coloring_size(coloring);
    for (int b = 1; b <= n; ++b) ++counts[coloring[b]];
    int best = 1;
    for (int c = 2; c <= kNumColors; ++c)
        if (counts[c] > counts[best]) best = c;
    for (int c = 1; c <= kNumColors; ++c)
        if (c != best && counts[c] == counts[best]) return {};
    PluralityStatus st;
    st.has_plurality = true;
    for (int b = 1; b <= n; ++b)
        if (coloring[b] == best) st.balls.push_back(b);
    return st;
}

inline bool coloring_has_plurality(const Coloring& coloring) {
    return plurality_status(coloring).has_plurality;
}

// Color classes of a coloring as a canonical unlabeled partition:
// nonempty classes sorted by smallest member.
inline std::vector<std::vector<int>> color_classes(const Coloring& coloring) {
    std::vector<std::vector<int>> by_color(kNumColors + 1);
    int n = coloring_size(coloring);
    for (int b = 1; b <= n; ++b) by_color[coloring[b]].push_back(b);
    std::vector<std::vector<int>> classes;
    for (int c = 1; c <= kNumColors; ++c)
        if (!by_color[c].empty()) classes.push_back(std::move(by_color[c]));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

struct Resolution {
    enum Kind { Unresolved, NoPlurality, PluralityBall, PartitionKnown };
    Kind kind = Unresolved;
    int ball = 0;                            // PluralityBall
    std::vector<std::vector<int>> classes;   // PartitionKnown

    bool resolved() const { return kind != Unresolved; }
};

struct Declaration {
    enum Kind { None, NoPlurality, PluralityBall, PartitionKnown };
    Kind kind = None;
    int ball = 0;
    std::vector<std::vector<int>> classes;

    static Declaration no_plurality() { return {NoPlurality, 0, {}}; }
    static Declaration plurality_ball(int b) { return {PluralityBall, b, {}}; }
    static Declaration partition(std::vector<std::vector<int>> cls) {
        Declaration d{PartitionKnown, 0, std::move(cls)};
        for (auto& c : d.classes) std::sort(c.begin(), c.end());
        std::sort(d.classes.begin(), d.classes.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return d;
    }
};

enum class Goal { Plurality, Partition };

inline const char* goal_name(Goal g) { return g == Goal::Plurality ? "plurality" : "partition"; }

}  // namespace plurality
