#include "plurality/constraint_graph.hpp"

#include <array>
#include <cassert>
#include <deque>

namespace plurality {

ConstraintGraph::ConstraintGraph(int n) : n_(n), parent_(n + 1), touched_(n + 1, 0) {
    if (n < 1) throw std::invalid_argument("constraint graph needs n >= 1");
    for (int b = 0; b <= n; ++b) parent_[b] = b;
}

int ConstraintGraph::find(int ball) const {
    int root = ball;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[ball] != root) {
        int next = parent_[ball];
        parent_[ball] = root;
        ball = next;
    }
    return root;
}

bool ConstraintGraph::marked_uneq(int a, int b) const {
    int ra = find(a), rb = find(b);
    if (ra > rb) std::swap(ra, rb);
    return uneq_.count({ra, rb}) > 0;
}

std::vector<int> ConstraintGraph::class_of(int ball) const {
    std::vector<int> out;
    int r = find(ball);
    for (int b = 1; b <= n_; ++b)
        if (find(b) == r) out.push_back(b);
    return out;
}

void ConstraintGraph::merge(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb);  // keep the smallest ball as representative
    parent_[rb] = ra;
    // Re-normalize constraints that referenced the absorbed representative.
    std::vector<std::pair<int, int>> moved;
    for (auto it = uneq_.begin(); it != uneq_.end();) {
        if (it->first == rb || it->second == rb) {
            moved.push_back(*it);
            it = uneq_.erase(it);
        } else {
            ++it;
        }
    }
    for (auto [x, y] : moved) {
        int u = (x == rb) ? ra : x;
        int v = (y == rb) ? ra : y;
        if (u == v) {
            contradictory_ = true;
            continue;
        }
        if (u > v) std::swap(u, v);
        uneq_.insert({u, v});
    }
}

void ConstraintGraph::add_uneq(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
        contradictory_ = true;
        return;
    }
    if (ra > rb) std::swap(ra, rb);
    uneq_.insert({ra, rb});
}

void ConstraintGraph::apply_answer(const Query& q, const AnswerPartition& a) {
    a.validate(q);
    for (int b : q.balls) {
        if (b < 1 || b > n_) throw std::invalid_argument("ball out of range");
        if (!touched_[b]) {
            touched_[b] = 1;
            ++touched_count_;
        }
    }
    for (const auto& part : a.parts)
        for (size_t i = 1; i < part.size(); ++i) merge(part[0], part[i]);
    for (size_t i = 0; i < a.parts.size(); ++i)
        for (size_t j = i + 1; j < a.parts.size(); ++j)
            add_uneq(a.parts[i][0], a.parts[j][0]);
}

bool ConstraintGraph::answer_is_noop(const Query& q, const AnswerPartition& a) const {
    for (int b : q.balls)
        if (!touched_[b]) return false;
    for (const auto& part : a.parts)
        for (size_t i = 1; i < part.size(); ++i)
            if (!same_class(part[0], part[i])) return false;
    for (size_t i = 0; i < a.parts.size(); ++i)
        for (size_t j = i + 1; j < a.parts.size(); ++j)
            if (!marked_uneq(a.parts[i][0], a.parts[j][0])) return false;
    return true;
}

bool ConstraintGraph::operator==(const ConstraintGraph& o) const {
    if (n_ != o.n_ || contradictory_ != o.contradictory_ || touched_ != o.touched_) return false;
    for (int b = 1; b <= n_; ++b)
        if (find(b) != o.find(b)) return false;
    return uneq_ == o.uneq_;
}

ConstraintGraph::Quotient ConstraintGraph::quotient() const {
    Quotient qt;
    qt.n = n_;
    qt.node_of_ball.assign(n_ + 1, -1);
    for (int b = 1; b <= n_; ++b) {
        if (find(b) == b) {
            qt.node_of_ball[b] = static_cast<int>(qt.reps.size());
            qt.reps.push_back(b);
        }
    }
    int m = static_cast<int>(qt.reps.size());
    qt.weight.assign(m, 0);
    qt.members.resize(m);
    qt.adj.resize(m);
    for (int b = 1; b <= n_; ++b) {
        int node = qt.node_of_ball[find(b)];
        qt.node_of_ball[b] = node;
        ++qt.weight[node];
        qt.members[node].push_back(b);
    }
    for (auto [u, v] : uneq_) {
        int a = qt.node_of_ball[u], b = qt.node_of_ball[v];
        qt.adj[a].push_back(b);
        qt.adj[b].push_back(a);
    }
    return qt;
}

// --- consistent coloring enumeration -----------------------------------

namespace {

// Backtracking over quotient nodes in representative order, colors tried
// ascending, so the produced sequence is lexicographic on the quotient
// color vector.
bool enumerate_rec(const ConstraintGraph::Quotient& qt, std::vector<int>& color, int node,
                   std::size_t limit, std::vector<Coloring>& out) {
    int m = static_cast<int>(qt.reps.size());
    if (node == m) {
        Coloring c(qt.n + 1, 0);
        for (int i = 0; i < m; ++i)
            for (int b : qt.members[i]) c[b] = color[i];
        out.push_back(std::move(c));
        return out.size() < limit;
    }
    for (int col = 1; col <= kNumColors; ++col) {
        bool ok = true;
        for (int nb : qt.adj[node])
            if (nb < node && color[nb] == col) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[node] = col;
        if (!enumerate_rec(qt, color, node + 1, limit, out)) return false;
    }
    return true;
}

}  // namespace

std::vector<Coloring> enumerate_consistent(const ConstraintGraph& g, std::size_t limit) {
    std::vector<Coloring> out;
    if (g.contradictory() || limit == 0) return out;
    auto qt = g.quotient();
    std::vector<int> color(qt.reps.size(), 0);
    enumerate_rec(qt, color, 0, limit, out);
    return out;
}

bool has_consistent_coloring(const ConstraintGraph& g) {
    return !enumerate_consistent(g, 1).empty();
}

// --- two-coloring feasibility -------------------------------------------

TwoColoringFeasibility::TwoColoringFeasibility(const ConstraintGraph& g) : n_(g.n()) {
    comp_of_ball_.assign(n_ + 1, -1);
    side_of_ball_.assign(n_ + 1, -1);
    if (g.contradictory()) {
        bipartite_ = false;
        return;
    }
    auto qt = g.quotient();
    int m = static_cast<int>(qt.reps.size());
    std::vector<int> comp(m, -1), side(m, -1);
    int ncomp = 0;
    for (int start = 0; start < m && bipartite_; ++start) {
        if (comp[start] != -1) continue;
        int c = ncomp++;
        side_weight_.push_back({0, 0});
        std::deque<int> bfs{start};
        comp[start] = c;
        side[start] = 0;
        while (!bfs.empty() && bipartite_) {
            int u = bfs.front();
            bfs.pop_front();
            side_weight_[c][side[u]] += qt.weight[u];
            for (int v : qt.adj[u]) {
                if (comp[v] == -1) {
                    comp[v] = c;
                    side[v] = side[u] ^ 1;
                    bfs.push_back(v);
                } else if (side[v] == side[u]) {
                    bipartite_ = false;
                    break;
                }
            }
        }
    }
    if (!bipartite_) return;
    for (int b = 1; b <= n_; ++b) {
        int node = qt.node_of_ball[b];
        comp_of_ball_[b] = comp[node];
        side_of_ball_[b] = side[node];
    }
    // prefix_[i] = sums achievable from components [0, i); suffix_[i] = from [i, ncomp).
    int words = (n_ >> 6) + 1;
    prefix_.assign(ncomp + 1, Bits(words, 0));
    suffix_.assign(ncomp + 1, Bits(words, 0));
    bit_set(prefix_[0], 0);
    for (int i = 0; i < ncomp; ++i)
        prefix_[i + 1] = shifted_or(prefix_[i], side_weight_[i][0], side_weight_[i][1]);
    bit_set(suffix_[ncomp], 0);
    for (int i = ncomp - 1; i >= 0; --i)
        suffix_[i] = shifted_or(suffix_[i + 1], side_weight_[i][0], side_weight_[i][1]);
}

TwoColoringFeasibility::Bits TwoColoringFeasibility::shifted_or(const Bits& b, int w0,
                                                                int w1) const {
    Bits out(b.size(), 0);
    for (int w : {w0, w1}) {
        int word = w >> 6, bit = w & 63;
        for (size_t i = 0; i + word < b.size(); ++i) {
            out[i + word] |= b[i] << bit;
            if (bit && i + word + 1 < b.size()) out[i + word + 1] |= b[i] >> (64 - bit);
        }
        if (w0 == w1) break;
    }
    return out;
}

bool TwoColoringFeasibility::feasible(int target) const {
    if (!bipartite_ || target < 0 || target > n_) return false;
    return bit_test(prefix_.back(), target);
}

bool TwoColoringFeasibility::feasible_with(int c, int contribution, int target) const {
    if (!bipartite_ || target < 0 || target > n_) return false;
    int rest = target - contribution;
    if (rest < 0) return false;
    for (int s = 0; s <= rest; ++s)
        if (bit_test(prefix_[c], s) && bit_test(suffix_[c + 1], rest - s)) return true;
    return false;
}

bool exists_two_coloring(const ConstraintGraph& g, int s1, int s2,
                         std::optional<ForcedBall> forced) {
    if (s1 + s2 != g.n()) throw std::invalid_argument("class sizes must sum to n");
    if (g.contradictory()) return false;
    TwoColoringFeasibility feas(g);
    if (!feas.bipartite()) return false;
    int large = std::max(s1, s2);
    if (!forced) return feas.feasible(large);
    int c = feas.component_of(forced->ball);
    int side = feas.side_of(forced->ball);
    // The ball's side joins the large class (or the small class, in which
    // case the opposite side joins the large one).
    int contribution = forced->on_larger ? feas.side_weight(c, side) : feas.side_weight(c, side ^ 1);
    return feas.feasible_with(c, contribution, large);
}

std::optional<Coloring> lex_min_two_coloring(const ConstraintGraph& g, int s1, int s2,
                                             std::optional<int> forced_large) {
    if (s1 < s2) std::swap(s1, s2);
    if (s1 + s2 != g.n()) throw std::invalid_argument("class sizes must sum to n");
    if (g.contradictory()) return std::nullopt;
    TwoColoringFeasibility feas(g);
    if (!feas.bipartite()) return std::nullopt;
    int n = g.n();
    int ncomp = feas.component_count();
    // orient[c]: which side of component c goes to the large class (-1 undecided).
    std::vector<int> orient(ncomp, -1);
    int committed = 0;

    // Feasibility of completing the current partial orientation to exactly s1.
    auto completable = [&]() {
        std::vector<std::uint64_t> dp((n >> 6) + 1, 0);
        dp[0] = 1;
        int fixed = committed;
        for (int c = 0; c < ncomp; ++c) {
            if (orient[c] != -1) continue;
            std::vector<std::uint64_t> next(dp.size(), 0);
            for (int s : {feas.side_weight(c, 0), feas.side_weight(c, 1)}) {
                int word = s >> 6, bit = s & 63;
                for (size_t i = 0; i + word < dp.size(); ++i) {
                    next[i + word] |= dp[i] << bit;
                    if (bit && i + word + 1 < dp.size()) next[i + word + 1] |= dp[i] >> (64 - bit);
                }
                if (feas.side_weight(c, 0) == feas.side_weight(c, 1)) break;
            }
            dp = std::move(next);
        }
        int want = s1 - fixed;
        if (want < 0 || want > n) return false;
        return ((dp[want >> 6] >> (want & 63)) & 1) != 0;
    };

    if (forced_large) {
        int c = feas.component_of(*forced_large);
        orient[c] = feas.side_of(*forced_large);
        committed += feas.side_weight(c, orient[c]);
    }
    if (!completable()) return std::nullopt;

    // Greedy lexicographic fill: give each ball color 1 (the large class)
    // whenever a completion still exists.
    for (int b = 1; b <= n; ++b) {
        int c = feas.component_of(b);
        if (orient[c] != -1) continue;
        int want = feas.side_of(b);
        orient[c] = want;
        committed += feas.side_weight(c, want);
        if (!completable()) {
            committed -= feas.side_weight(c, want);
            orient[c] = want ^ 1;
            committed += feas.side_weight(c, orient[c]);
            assert(completable());
        }
    }
    assert(committed == s1);
    Coloring out(n + 1, 0);
    for (int b = 1; b <= n; ++b)
        out[b] = (feas.side_of(b) == orient[feas.component_of(b)]) ? 1 : 2;
    return out;
}

}  // namespace plurality
