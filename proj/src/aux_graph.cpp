#include "plurality/aux_graph.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace plurality {

const char* edge_color_name(EdgeColor c) {
    switch (c) {
        case EdgeColor::Red: return "red";
        case EdgeColor::Blue: return "blue";
        case EdgeColor::Green: return "green";
    }
    return "?";
}

void AuxGraph::begin_step() { events_.emplace_back(); }

void AuxGraph::add_edge(int u, int v, EdgeColor color) {
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("bad edge endpoints");
    auto k = key(u, v);
    auto it = edges_.find(k);
    if (it != edges_.end()) {
        if (it->second.color != color)
            throw std::runtime_error("edge re-added with a different color");
        return;  // already present: nothing to add
    }
    if (events_.empty()) begin_step();
    edges_[k] = Edge{k.first, k.second, color, step_count() - 1};
    events_.back().push_back({Event::Add, k.first, k.second, color});
}

void AuxGraph::recolor_edge(int u, int v, EdgeColor color) {
    auto it = edges_.find(key(u, v));
    if (it == edges_.end()) throw std::invalid_argument("recolor of a missing edge");
    it->second.color = color;
    events_.back().push_back({Event::Recolor, it->second.u, it->second.v, color});
}

void AuxGraph::remove_edge(int u, int v) {
    auto k = key(u, v);
    auto it = edges_.find(k);
    if (it == edges_.end()) throw std::invalid_argument("removal of a missing edge");
    events_.back().push_back({Event::Remove, k.first, k.second, it->second.color});
    edges_.erase(it);
}

bool AuxGraph::has_edge(int u, int v) const { return edges_.count(key(u, v)) > 0; }

std::optional<EdgeColor> AuxGraph::edge_color(int u, int v) const {
    auto it = edges_.find(key(u, v));
    if (it == edges_.end()) return std::nullopt;
    return it->second.color;
}

int AuxGraph::count(EdgeColor c) const {
    int total = 0;
    for (const auto& [k, e] : edges_) total += e.color == c;
    return total;
}

int AuxGraph::red_degree(int ball) const {
    int d = 0;
    for (const auto& [k, e] : edges_)
        if (e.color == EdgeColor::Red && (e.u == ball || e.v == ball)) ++d;
    return d;
}

int AuxGraph::blue_degree(int ball) const {
    int d = 0;
    for (const auto& [k, e] : edges_)
        if (e.color == EdgeColor::Blue && (e.u == ball || e.v == ball)) ++d;
    return d;
}

std::map<int, std::vector<std::pair<int, int>>> AuxGraph::red_edges_by_step(int ball) const {
    std::map<int, std::vector<std::pair<int, int>>> out;
    for (const auto& [k, e] : edges_)
        if (e.color == EdgeColor::Red && (e.u == ball || e.v == ball))
            out[e.step].push_back(k);
    return out;
}

std::string AuxGraph::to_dot() const {
    auto view = analyze_components(*this);
    std::ostringstream os;
    os << "graph aux {\n";
    os << "  node [shape=circle];\n";
    for (size_t ci = 0; ci < view.comps.size(); ++ci) {
        const auto& comp = view.comps[ci];
        os << "  subgraph cluster_" << ci << " {\n";
        os << "    label=\"d=" << comp.imbalance() << "\";\n";
        for (int b : comp.balls) os << "    b" << b << " [label=\"" << b << "\"];\n";
        os << "  }\n";
    }
    for (const auto& [k, e] : edges_)
        os << "  b" << e.u << " -- b" << e.v << " [color=" << edge_color_name(e.color) << "];\n";
    os << "}\n";
    return os.str();
}

AuxComponents analyze_components(const AuxGraph& g, bool red_only) {
    int n = g.n();
    AuxComponents view;
    view.comp_of.assign(n + 1, -1);
    view.side_of.assign(n + 1, -1);

    std::vector<std::vector<std::pair<int, EdgeColor>>> adj(n + 1);
    for (const auto& [k, e] : g.edges()) {
        if (red_only && e.color != EdgeColor::Red) continue;
        adj[e.u].push_back({e.v, e.color});
        adj[e.v].push_back({e.u, e.color});
    }
    std::vector<int> blue_deg(n + 1, 0);
    for (const auto& [k, e] : g.edges())
        if (e.color == EdgeColor::Blue) {
            ++blue_deg[e.u];
            ++blue_deg[e.v];
        }

    for (int start = 1; start <= n; ++start) {
        if (view.comp_of[start] != -1) continue;
        int ci = static_cast<int>(view.comps.size());
        view.comps.emplace_back();
        auto& comp = view.comps.back();
        std::deque<int> bfs{start};
        view.comp_of[start] = ci;
        view.side_of[start] = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            comp.balls.push_back(u);
            ++comp.side_weight[view.side_of[u]];
            for (auto [v, color] : adj[u]) {
                int side = view.side_of[u] ^ (color == EdgeColor::Blue ? 0 : 1);
                if (view.comp_of[v] == -1) {
                    view.comp_of[v] = ci;
                    view.side_of[v] = side;
                    bfs.push_back(v);
                } else if (view.side_of[v] != side) {
                    view.sides_valid = false;
                }
            }
        }
        std::sort(comp.balls.begin(), comp.balls.end());
    }
    for (const auto& [k, e] : g.edges()) {
        if (red_only && e.color != EdgeColor::Red) continue;
        auto& comp = view.comps[view.comp_of[e.u]];
        if (e.color == EdgeColor::Red) ++comp.red_edges;
        if (e.color == EdgeColor::Blue) ++comp.blue_edges;
        if (e.color == EdgeColor::Green) ++comp.green_edges;
    }
    for (auto& comp : view.comps) {
        comp.deficient = comp.red_edges == comp.size() - 1;
        if (comp.deficient)
            for (int b : comp.balls)
                if (blue_deg[b] == 0) comp.p3c.push_back(b);
    }
    return view;
}

int signed_imbalance(const AuxComponents::Component& comp, const AuxComponents& view,
                     const Coloring& reference) {
    int anchor = comp.balls.front();
    // Side of the anchor within the component, relative to reference class 1.
    int plus_side = reference[anchor] == 1 ? view.side_of[anchor] : view.side_of[anchor] ^ 1;
    return comp.side_weight[plus_side] - comp.side_weight[plus_side ^ 1];
}

ComponentClassification classify_components(const AuxComponents& view, const Coloring& reference,
                                            const std::vector<int>& named_comps) {
    ComponentClassification cls;
    cls.named = named_comps;
    for (size_t ci = 0; ci < view.comps.size(); ++ci) {
        if (std::find(named_comps.begin(), named_comps.end(), static_cast<int>(ci)) !=
            named_comps.end())
            continue;
        int od = signed_imbalance(view.comps[ci], view, reference);
        cls.by_od[od].push_back(static_cast<int>(ci));
    }
    int minus_one = cls.count(-1);
    for (const auto& [od, ids] : cls.by_od)
        if (od > 0 && od <= minus_one + 1)
            for (int id : ids) cls.h_plus.push_back(id);
    return cls;
}

}  // namespace plurality
