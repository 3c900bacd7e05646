#include "plurality/resolution.hpp"

#include <functional>

namespace plurality {

namespace {

struct SearchContext {
    const ConstraintGraph::Quotient& qt;
    std::vector<int> color;       // per quotient node, 0 = unassigned
    int counts[kNumColors + 1] = {0, 0, 0, 0};
    int remaining = 0;            // total weight of unassigned nodes
};

// Generic quotient-coloring backtracking.  `prune(ctx)` may cut a partial
// assignment, `accept(ctx)` tests a full one.  Nodes are filled in
// representative order, colors ascending, so the first hit is
// deterministic.
bool search(SearchContext& ctx, int node, const std::function<bool(const SearchContext&)>& prune,
            const std::function<bool(const SearchContext&)>& accept) {
    int m = static_cast<int>(ctx.qt.reps.size());
    if (node == m) return accept(ctx);
    for (int col = 1; col <= kNumColors; ++col) {
        bool ok = true;
        for (int nb : ctx.qt.adj[node])
            if (nb < node && ctx.color[nb] == col) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ctx.color[node] = col;
        ctx.counts[col] += ctx.qt.weight[node];
        ctx.remaining -= ctx.qt.weight[node];
        bool cut = prune && prune(ctx);
        if (!cut && search(ctx, node + 1, prune, accept)) return true;
        ctx.remaining += ctx.qt.weight[node];
        ctx.counts[col] -= ctx.qt.weight[node];
        ctx.color[node] = 0;
    }
    return false;
}

Coloring expand(const SearchContext& ctx) {
    Coloring c(ctx.qt.n + 1, 0);
    for (size_t i = 0; i < ctx.qt.reps.size(); ++i)
        for (int b : ctx.qt.members[i]) c[b] = ctx.color[i];
    return c;
}

std::optional<Coloring> run_search(const ConstraintGraph& g,
                                   const std::function<bool(const SearchContext&)>& prune,
                                   const std::function<bool(const SearchContext&)>& accept) {
    if (g.contradictory()) return std::nullopt;
    auto qt = g.quotient();
    SearchContext ctx{qt, std::vector<int>(qt.reps.size(), 0)};
    for (int w : qt.weight) ctx.remaining += w;
    std::optional<Coloring> out;
    auto accept_and_store = [&](const SearchContext& c) {
        if (!accept(c)) return false;
        out = expand(c);
        return true;
    };
    search(ctx, 0, prune, accept_and_store);
    return out;
}

bool counts_have_plurality(const int counts[]) {
    int best = 1;
    for (int c = 2; c <= kNumColors; ++c)
        if (counts[c] > counts[best]) best = c;
    for (int c = 1; c <= kNumColors; ++c)
        if (c != best && counts[c] == counts[best]) return false;
    return true;
}

}  // namespace

std::optional<Coloring> find_plurality_witness(const ConstraintGraph& g) {
    return run_search(g, nullptr,
                      [](const SearchContext& ctx) { return counts_have_plurality(ctx.counts); });
}

std::optional<Coloring> find_no_plurality_witness(const ConstraintGraph& g) {
    // A top tie is impossible once the gap between the two largest classes
    // exceeds the unassigned weight.
    auto prune = [](const SearchContext& ctx) {
        int s[3] = {ctx.counts[1], ctx.counts[2], ctx.counts[3]};
        std::sort(s, s + 3);
        return s[2] - s[1] > ctx.remaining;
    };
    return run_search(g, prune,
                      [](const SearchContext& ctx) { return !counts_have_plurality(ctx.counts); });
}

std::optional<Coloring> find_coloring_ball_not_plurality(const ConstraintGraph& g, int ball) {
    auto qt = g.quotient();
    int node = qt.node_of_ball[ball];
    auto prune = [node](const SearchContext& ctx) {
        int bc = ctx.color[node];
        if (bc == 0) return false;
        // The ball's class cannot be caught once it leads by more than the
        // unassigned weight.
        int other = 0;
        for (int c = 1; c <= kNumColors; ++c)
            if (c != bc) other = std::max(other, ctx.counts[c]);
        return ctx.counts[bc] - other > ctx.remaining;
    };
    auto accept = [node](const SearchContext& ctx) {
        int bc = ctx.color[node];
        for (int c = 1; c <= kNumColors; ++c)
            if (c != bc && ctx.counts[c] >= ctx.counts[bc]) return true;
        return false;
    };
    return run_search(g, prune, accept);
}

std::vector<Coloring> enumerate_consistent_canonical(const ConstraintGraph& g, std::size_t limit) {
    std::vector<Coloring> out;
    if (g.contradictory() || limit == 0) return out;
    auto qt = g.quotient();
    int m = static_cast<int>(qt.reps.size());
    std::vector<int> color(m, 0);
    // Canonical labeling: a node may only use a color at most one larger
    // than the largest color used before it, so each unlabeled partition is
    // produced exactly once.
    std::function<bool(int, int)> rec = [&](int node, int maxc) {
        if (node == m) {
            Coloring c(qt.n + 1, 0);
            for (int i = 0; i < m; ++i)
                for (int b : qt.members[i]) c[b] = color[i];
            out.push_back(std::move(c));
            return out.size() < limit;
        }
        int cap = std::min(kNumColors, maxc + 1);
        for (int col = 1; col <= cap; ++col) {
            bool ok = true;
            for (int nb : qt.adj[node])
                if (nb < node && color[nb] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[node] = col;
            if (!rec(node + 1, std::max(maxc, col))) return false;
            color[node] = 0;
        }
        return true;
    };
    rec(0, 0);
    return out;
}

Resolution resolution(const ConstraintGraph& g, Goal goal) {
    Resolution r;
    if (goal == Goal::Partition) {
        auto reps = enumerate_consistent_canonical(g, 2);
        if (reps.size() >= 2) return r;
        r.kind = Resolution::PartitionKnown;
        if (!reps.empty()) r.classes = color_classes(reps[0]);
        return r;
    }

    auto with_plurality = find_plurality_witness(g);
    if (!with_plurality) {
        // Every consistent coloring (possibly none) lacks a plurality ball.
        r.kind = Resolution::NoPlurality;
        return r;
    }
    auto without_plurality = find_no_plurality_witness(g);
    if (without_plurality) return r;  // both outcomes possible
    // Every consistent coloring has a plurality ball; look for one common
    // to all of them.  Candidates are the plurality balls of one witness.
    auto status = plurality_status(*with_plurality);
    for (int b : status.balls) {
        if (!find_coloring_ball_not_plurality(g, b)) {
            r.kind = Resolution::PluralityBall;
            r.ball = b;
            return r;
        }
    }
    return r;  // plurality exists everywhere but no single ball works
}

}  // namespace plurality
