#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "plurality/constraint_graph.hpp"
#include "plurality/resolution.hpp"
#include "plurality/types.hpp"

using namespace plurality;

namespace {

AnswerPartition ans(std::vector<std::vector<int>> parts) { return AnswerPartition(std::move(parts)); }

// Test-only oracle: every 3-coloring of n balls.
std::vector<Coloring> all_colorings(int n) {
    std::vector<Coloring> out;
    Coloring c(n + 1, 1);
    while (true) {
        out.push_back(c);
        int i = n;
        while (i >= 1 && c[i] == kNumColors) c[i--] = 1;
        if (i == 0) break;
        ++c[i];
    }
    return out;
}

bool coloring_satisfies(const ConstraintGraph& g, const Coloring& c) {
    for (int b = 1; b <= g.n(); ++b)
        if (c[g.find(b)] != c[b]) return false;
    for (auto [u, v] : g.uneq())
        if (c[u] == c[v]) return false;
    return true;
}

// Independent satisfiability check on the quotient: most-constrained node
// first with forward checking (a different search order from
// enumerate_consistent's lexicographic one).
bool dpll_satisfiable(const ConstraintGraph& g) {
    if (g.contradictory()) return false;
    auto qt = g.quotient();
    int m = static_cast<int>(qt.reps.size());
    std::vector<int> color(m, 0);
    std::vector<std::set<int>> domain(m, {1, 2, 3});
    std::function<bool()> rec = [&]() {
        int pick = -1;
        size_t best = 4;
        for (int i = 0; i < m; ++i)
            if (color[i] == 0 && domain[i].size() < best) {
                best = domain[i].size();
                pick = i;
            }
        if (pick == -1) return true;
        if (best == 0) return false;
        for (int col : std::set<int>(domain[pick])) {
            color[pick] = col;
            std::vector<int> shrunk;
            bool dead = false;
            for (int nb : qt.adj[pick])
                if (color[nb] == 0 && domain[nb].erase(col)) {
                    shrunk.push_back(nb);
                    if (domain[nb].empty()) dead = true;
                }
            if (!dead && rec()) return true;
            for (int nb : shrunk) domain[nb].insert(col);
            color[pick] = 0;
        }
        return false;
    };
    return rec();
}

Resolution resolution_by_enumeration(const ConstraintGraph& g, Goal goal) {
    Resolution r;
    std::vector<Coloring> consistent;
    for (const auto& c : all_colorings(g.n()))
        if (coloring_satisfies(g, c)) consistent.push_back(c);
    if (goal == Goal::Partition) {
        std::set<std::vector<std::vector<int>>> partitions;
        for (const auto& c : consistent) partitions.insert(color_classes(c));
        if (partitions.size() <= 1) {
            r.kind = Resolution::PartitionKnown;
            if (!partitions.empty()) r.classes = *partitions.begin();
        }
        return r;
    }
    bool any_plural = false;
    bool any_no_plural = false;
    std::set<int> common;
    bool first = true;
    for (const auto& c : consistent) {
        auto st = plurality_status(c);
        if (!st.has_plurality) {
            any_no_plural = true;
            continue;
        }
        any_plural = true;
        std::set<int> balls(st.balls.begin(), st.balls.end());
        if (first) {
            common = balls;
            first = false;
        } else {
            std::set<int> inter;
            std::set_intersection(common.begin(), common.end(), balls.begin(), balls.end(),
                                  std::inserter(inter, inter.begin()));
            common = inter;
        }
    }
    if (!any_plural) {
        r.kind = Resolution::NoPlurality;
        return r;
    }
    if (!any_no_plural && !common.empty()) {
        r.kind = Resolution::PluralityBall;
        r.ball = *common.begin();
    }
    return r;
}

// Random reachable state: play random queries with answers induced by a
// hidden random coloring.
ConstraintGraph random_state(int n, int k, int steps, std::mt19937_64& rng) {
    ConstraintGraph g(n);
    Coloring hidden(n + 1, 0);
    for (int b = 1; b <= n; ++b) hidden[b] = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < steps; ++s) {
        std::vector<int> balls(n);
        for (int b = 1; b <= n; ++b) balls[b - 1] = b;
        for (int i = 0; i < k; ++i) std::swap(balls[i], balls[i + rng() % (n - i)]);
        balls.resize(k);
        Query q(balls);
        g.apply_answer(q, answer_from_coloring(q, hidden));
    }
    return g;
}

}  // namespace

TEST_CASE("plurality status of explicit colorings") {
    auto st = plurality_status(make_coloring({1, 1, 2, 3}));
    CHECK(st.has_plurality);
    CHECK(st.balls == std::vector<int>{1, 2});
    CHECK_FALSE(plurality_status(make_coloring({1, 1, 2, 2})).has_plurality);
    CHECK_FALSE(plurality_status(make_coloring({1, 2, 3})).has_plurality);
}

TEST_CASE("apply_answer records merges and disequalities") {
    ConstraintGraph g(3);
    g.apply_answer(Query({1, 2, 3}), ans({{1, 2}, {3}}));
    CHECK(g.same_class(1, 2));
    CHECK_FALSE(g.same_class(1, 3));
    CHECK(g.marked_uneq(1, 3));
    CHECK(g.marked_uneq(2, 3));
    CHECK_FALSE(g.contradictory());

    ConstraintGraph h(4);
    h.apply_answer(Query({1, 2, 3}), ans({{1, 2}, {3}}));
    h.apply_answer(Query({1, 3, 4}), ans({{1, 3, 4}}));
    CHECK(h.contradictory());  // merging 1 and 3 collides with their disequality

    ConstraintGraph m(4);
    m.apply_answer(Query({1, 2, 4}), ans({{1, 2, 4}}));
    m.apply_answer(Query({1, 3, 4}), ans({{1, 3, 4}}));
    CHECK(m.same_class(1, 3));
    CHECK(m.class_of(1) == std::vector<int>{1, 2, 3, 4});
    CHECK(m.uneq().empty());
}

TEST_CASE("apply_answer rejects malformed partitions") {
    ConstraintGraph g(4);
    Query q({1, 2, 3});
    CHECK_THROWS_AS(g.apply_answer(q, ans({{1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(g.apply_answer(q, ans({{1, 2}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(g.apply_answer(q, ans({{1}, {2}, {3}, {}})), std::invalid_argument);
    CHECK_THROWS_AS(g.apply_answer(q, ans({{1, 2}, {4}})), std::invalid_argument);
}

TEST_CASE("enumerate_consistent counts on tiny states") {
    ConstraintGraph g(3);
    g.apply_answer(Query({1, 2, 3}), ans({{1}, {2}, {3}}));
    CHECK(enumerate_consistent(g, 100).size() == 6);

    ConstraintGraph h(3);
    h.apply_answer(Query({1, 2, 3}), ans({{1, 2, 3}}));
    CHECK(enumerate_consistent(h, 100).size() == 3);

    ConstraintGraph e(2);
    CHECK(enumerate_consistent(e, 100).size() == 9);

    CHECK(enumerate_consistent(g, 4).size() == 4);  // limit respected
}

TEST_CASE("answers commute: permuting a transcript yields the same graph") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Coloring hidden(n + 1, 0);
        for (int b = 1; b <= n; ++b) hidden[b] = 1 + static_cast<int>(rng() % 3);
        std::vector<std::pair<Query, AnswerPartition>> steps;
        for (int s = 0; s < 5; ++s) {
            std::vector<int> balls(n);
            for (int b = 1; b <= n; ++b) balls[b - 1] = b;
            for (int i = 0; i < 3; ++i) std::swap(balls[i], balls[i + rng() % (n - i)]);
            balls.resize(3);
            Query q(balls);
            steps.emplace_back(q, answer_from_coloring(q, hidden));
        }
        ConstraintGraph a(n), b(n);
        for (const auto& [q, an] : steps) a.apply_answer(q, an);
        std::shuffle(steps.begin(), steps.end(), rng);
        for (const auto& [q, an] : steps) b.apply_answer(q, an);
        REQUIRE(a == b);
    }
}

TEST_CASE("enumerate_consistent nonempty iff independent satisfiability check succeeds") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);  // up to 8
        ConstraintGraph g(n);
        int steps = static_cast<int>(rng() % 5);
        for (int s = 0; s < steps; ++s) {
            std::vector<int> balls(n);
            for (int b = 1; b <= n; ++b) balls[b - 1] = b;
            for (int i = 0; i < 3; ++i) std::swap(balls[i], balls[i + rng() % (n - i)]);
            balls.resize(3);
            Query q(balls);
            // random partition of q, possibly inconsistent with earlier ones
            std::vector<std::vector<int>> parts(1 + rng() % 3);
            for (int b : q.balls) parts[rng() % parts.size()].push_back(b);
            std::vector<std::vector<int>> nonempty;
            for (auto& p : parts)
                if (!p.empty()) nonempty.push_back(p);
            g.apply_answer(q, ans(nonempty));
        }
        bool enumerated = !enumerate_consistent(g, 1).empty();
        bool sat = dpll_satisfiable(g);
        REQUIRE(enumerated == sat);
    }
}

TEST_CASE("exists_two_coloring on the documented imbalance profiles") {
    // components with imbalances [1,1]: two isolated balls, sizes (1,1)
    ConstraintGraph a(2);
    CHECK(exists_two_coloring(a, 1, 1));

    // imbalances [3,1]: one merged triple plus an isolated ball, sizes (2,2)
    ConstraintGraph b(4);
    b.apply_answer(Query({1, 2, 3}), ans({{1, 2, 3}}));
    CHECK_FALSE(exists_two_coloring(b, 2, 2));

    // imbalances [2,1,1]: a merged pair plus two isolated balls, sizes (2,2)
    ConstraintGraph c(4);
    c.apply_answer(Query({1, 2}), ans({{1, 2}}));
    CHECK(exists_two_coloring(c, 2, 2));

    // two merged triples: achievable large-class sizes are only 0, 3, 6
    ConstraintGraph d(6);
    d.apply_answer(Query({1, 2, 3}), ans({{1, 2, 3}}));
    d.apply_answer(Query({4, 5, 6}), ans({{4, 5, 6}}));
    CHECK(exists_two_coloring(d, 3, 3));
    CHECK_FALSE(exists_two_coloring(d, 4, 2));
    CHECK(exists_two_coloring(d, 3, 3, ForcedBall{1, true}));

    // a disequality triangle is not 2-colorable at all
    ConstraintGraph t(3);
    t.apply_answer(Query({1, 2, 3}), ans({{1}, {2}, {3}}));
    CHECK_FALSE(exists_two_coloring(t, 2, 1));
}

TEST_CASE("exists_two_coloring matches brute force on reachable states") {
    std::mt19937_64 rng(23);
    int states = 0;
    while (states < 400) {
        int n = 4 + static_cast<int>(rng() % 7);  // up to 10
        auto g = random_state(n, 3, 1 + rng() % 6, rng);
        ++states;
        for (int s1 = 0; s1 <= n; ++s1) {
            int s2 = n - s1;
            for (int f = 0; f < 3; ++f) {
                std::optional<ForcedBall> forced;
                if (f == 1) forced = ForcedBall{1 + static_cast<int>(rng() % n), true};
                if (f == 2) forced = ForcedBall{1 + static_cast<int>(rng() % n), false};
                bool fast = exists_two_coloring(g, s1, s2, forced);
                // brute force over all 2-colorings
                bool brute = false;
                for (int mask = 0; mask < (1 << n) && !brute; ++mask) {
                    Coloring c(n + 1, 0);
                    int ones = 0;
                    for (int b = 1; b <= n; ++b) {
                        c[b] = (mask >> (b - 1)) & 1 ? 1 : 2;
                        ones += c[b] == 1;
                    }
                    if (ones != s1) continue;
                    if (!coloring_satisfies(g, c)) continue;
                    if (forced) {
                        int cls = c[forced->ball];
                        int size = cls == 1 ? s1 : s2;
                        int want = forced->on_larger ? std::max(s1, s2) : std::min(s1, s2);
                        if (size != want) continue;
                    }
                    brute = true;
                }
                REQUIRE(fast == brute);
            }
        }
    }
}

TEST_CASE("lex_min_two_coloring returns the lexicographically first witness") {
    ConstraintGraph g(4);
    g.apply_answer(Query({1, 2, 3}), ans({{1, 2}, {3}}));
    auto w = lex_min_two_coloring(g, 2, 2);
    REQUIRE(w.has_value());
    CHECK(*w == make_coloring({1, 1, 2, 2}));
    // brute force: no consistent balanced 2-coloring is lexicographically smaller
    for (int mask = 0; mask < 16; ++mask) {
        Coloring c(5, 0);
        int ones = 0;
        for (int b = 1; b <= 4; ++b) {
            c[b] = (mask >> (b - 1)) & 1 ? 1 : 2;
            ones += c[b] == 1;
        }
        if (ones != 2 || !coloring_satisfies(g, c)) continue;
        bool not_after =
            std::lexicographical_compare(w->begin(), w->end(), c.begin(), c.end()) || *w == c;
        CHECK(not_after);
    }
    auto forced = lex_min_two_coloring(g, 2, 2, 3);
    REQUIRE(forced.has_value());
    CHECK((*forced)[3] == 1);
}

TEST_CASE("resolution on the documented examples") {
    ConstraintGraph g(3);
    g.apply_answer(Query({1, 2, 3}), ans({{1}, {2}, {3}}));
    CHECK(resolution(g, Goal::Plurality).kind == Resolution::NoPlurality);

    ConstraintGraph h(3);
    h.apply_answer(Query({1, 2, 3}), ans({{1, 2, 3}}));
    auto r = resolution(h, Goal::Plurality);
    CHECK(r.kind == Resolution::PluralityBall);
    CHECK(r.ball == 1);

    ConstraintGraph u(4);
    u.apply_answer(Query({1, 2, 3}), ans({{1, 2}, {3}}));
    CHECK(resolution(u, Goal::Plurality).kind == Resolution::Unresolved);
    // cross-check the example against full enumeration
    CHECK(resolution_by_enumeration(u, Goal::Plurality).kind == Resolution::Unresolved);
}

TEST_CASE("resolution matches full enumeration on random reachable states") {
    std::mt19937_64 rng(31);
    for (int game = 0; game < 300; ++game) {
        int n = 3 + static_cast<int>(rng() % 6);  // up to 8
        ConstraintGraph g(n);
        Coloring hidden(n + 1, 0);
        for (int b = 1; b <= n; ++b) hidden[b] = 1 + static_cast<int>(rng() % 3);
        int steps = 1 + static_cast<int>(rng() % 6);
        for (int s = 0; s < steps; ++s) {
            std::vector<int> balls(n);
            for (int b = 1; b <= n; ++b) balls[b - 1] = b;
            for (int i = 0; i < 3; ++i) std::swap(balls[i], balls[i + rng() % (n - i)]);
            balls.resize(3);
            Query q(balls);
            g.apply_answer(q, answer_from_coloring(q, hidden));
            for (Goal goal : {Goal::Plurality, Goal::Partition}) {
                auto fast = resolution(g, goal);
                auto slow = resolution_by_enumeration(g, goal);
                REQUIRE(fast.kind == slow.kind);
                if (fast.kind == Resolution::PluralityBall) REQUIRE(fast.ball == slow.ball);
                if (fast.kind == Resolution::PartitionKnown) REQUIRE(fast.classes == slow.classes);
            }
        }
    }
}

TEST_CASE("plurality_status never reports a ball outside the largest class") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + static_cast<int>(rng() % 9);
        Coloring c(n + 1, 0);
        for (int b = 1; b <= n; ++b) c[b] = 1 + static_cast<int>(rng() % 3);
        auto st = plurality_status(c);
        if (!st.has_plurality) continue;
        int counts[4] = {0, 0, 0, 0};
        for (int b = 1; b <= n; ++b) ++counts[c[b]];
        for (int b : st.balls)
            for (int col = 1; col <= 3; ++col)
                if (col != c[b]) REQUIRE(counts[c[b]] > counts[col]);
    }
}
