#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plurality/types.hpp"

namespace plurality {

enum class EdgeColor { Red, Blue, Green };

const char* edge_color_name(EdgeColor c);

// The adversary's bookkeeping graph: blue edges join balls shown to share a
// color, red edges join balls shown to differ, green edges are the special
// red edges incident to the designated third-color ball.  Every mutation is
// journaled per answer step so a transcript audit can replay the history.
class AuxGraph {
public:
    struct Edge {
        int u = 0, v = 0;  // u < v
        EdgeColor color = EdgeColor::Red;
        int step = -1;     // step that added the edge
    };
    struct Event {
        enum Kind { Add, Recolor, Remove };
        Kind kind = Add;
        int u = 0, v = 0;
        EdgeColor color = EdgeColor::Red;  // color added / recolored to
    };

    AuxGraph() = default;
    explicit AuxGraph(int n) : n_(n) {}

    int n() const { return n_; }
    int step_count() const { return static_cast<int>(events_.size()); }
    const std::vector<std::vector<Event>>& events() const { return events_; }
    const std::map<std::pair<int, int>, Edge>& edges() const { return edges_; }

    void begin_step();
    // Adds an edge unless already present; re-adding with a different color
    // is a strategy bug and throws.
    void add_edge(int u, int v, EdgeColor color);
    void recolor_edge(int u, int v, EdgeColor color);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::optional<EdgeColor> edge_color(int u, int v) const;

    int count(EdgeColor c) const;
    int red_degree(int ball) const;
    int blue_degree(int ball) const;
    // Red edges at `ball` grouped by the step that created them.
    std::map<int, std::vector<std::pair<int, int>>> red_edges_by_step(int ball) const;

    std::string to_dot() const;

private:
    int n_ = 0;
    std::map<std::pair<int, int>, Edge> edges_;
    std::vector<std::vector<Event>> events_;

    static std::pair<int, int> key(int u, int v) {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    }
};

// Connected-component view of an AuxGraph.  Components follow all edges;
// the two-coloring inside a component follows edge semantics (blue keeps
// the side, red and green flip it).  `sides_valid` goes false when the
// edges force an odd red/green cycle.
struct AuxComponents {
    struct Component {
        std::vector<int> balls;          // ascending
        int side_weight[2] = {0, 0};     // balls on side 0 / side 1
        int red_edges = 0;
        int blue_edges = 0;
        int green_edges = 0;
        bool deficient = false;          // red_edges == |balls| - 1
        std::vector<int> p3c;            // blue-degree-0 balls of a deficient component

        int imbalance() const { return std::abs(side_weight[0] - side_weight[1]); }
        int size() const { return static_cast<int>(balls.size()); }
        int larger_side() const { return side_weight[0] >= side_weight[1] ? 0 : 1; }
    };

    std::vector<Component> comps;
    std::vector<int> comp_of;   // ball -> component index
    std::vector<int> side_of;   // ball -> 0/1 within its component
    bool sides_valid = true;

    const Component& of_ball(int b) const { return comps[comp_of[b]]; }
};

// `red_only` restricts both connectivity and side propagation to red edges.
AuxComponents analyze_components(const AuxGraph& g, bool red_only = false);

// Signed imbalance of a component relative to a reference two-coloring:
// (balls of the component in the reference class of ball `anchor`) minus
// the rest, where sides of the coloring are classes 1 and 2.
int signed_imbalance(const AuxComponents::Component& comp, const AuxComponents& view,
                     const Coloring& reference);

// Families of components grouped by signed imbalance, relative to a
// reference coloring, excluding a set of named components.
struct ComponentClassification {
    std::vector<int> named;                 // excluded component ids
    std::map<int, std::vector<int>> by_od;  // signed imbalance -> component ids
    std::vector<int> h_plus;                // 0 < od(D) <= |H_{-1}| + 1

    int count(int od) const {
        auto it = by_od.find(od);
        return it == by_od.end() ? 0 : static_cast<int>(it->second.size());
    }
};

ComponentClassification classify_components(const AuxComponents& view, const Coloring& reference,
                                            const std::vector<int>& named_comps);

}  // namespace plurality
