#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho {

/// Ordered sequence of grid-line handles.  Final coordinates are assigned only
/// at finalization; during construction only the relative order matters.
class LineOrder {
public:
    int insert_front() { return insert_at(0); }
    int insert_back() { return insert_at(static_cast<int>(order_.size())); }
    int insert_before(int id) { return insert_at(pos(id)); }
    int insert_after(int id) { return insert_at(pos(id) + 1); }

    int pos(int id) const { return pos_[id]; }
    int size() const { return static_cast<int>(order_.size()); }
    int id_at(int index) const { return order_[index]; }
    const std::vector<int>& order() const { return order_; }

private:
    int insert_at(int index) {
        int id = static_cast<int>(pos_.size());
        order_.insert(order_.begin() + index, id);
        pos_.push_back(0);
        for (int i = 0; i < static_cast<int>(order_.size()); ++i) pos_[order_[i]] = i;
        return id;
    }
    std::vector<int> order_;  // ids, left-to-right / bottom-to-top
    std::vector<int> pos_;    // id -> index
};

struct GridPoint {
    int col = -1, row = -1;  // line handle ids
    bool operator==(const GridPoint&) const = default;
};

/// Drawing under construction.  Every unfinished edge owns a reserved column
/// and ends at an anchor from which it continues upward.
struct PartialDrawing {
    LineOrder cols, rows;
    std::vector<std::optional<GridPoint>> vertex_at;   // by vertex id
    std::vector<std::vector<GridPoint>> route;         // by edge id; anchors from the first-placed endpoint
    std::vector<char> finished;                        // by edge id
    std::vector<char> skipped;                         // by edge id: never drawn (omitted double edge)
    std::vector<std::optional<GridPoint>> open_end;    // by edge id: reserved column + anchor row

    // placement ledger
    struct Step {
        std::string label;
        int drows = 0, dcols = 0;
        bool is_pair = false;
        int pair_bound = 0;  // 2|Vi u Vj| - 1 for pair steps
    };
    std::vector<Step> steps;

    void init(const Graph& g) {
        vertex_at.assign(g.n + 1, std::nullopt);
        route.assign(g.m(), {});
        finished.assign(g.m(), 0);
        skipped.assign(g.m(), 0);
        open_end.assign(g.m(), std::nullopt);
    }
};

/// Finalized drawing: 1-based integer coordinates, rows numbered bottom-to-top.
struct Drawing {
    int n = 0;
    std::vector<std::pair<int, int>> vertex;  // by vertex id (index 0 unused)
    struct EdgeRoute {
        Vertex u = 0, v = 0;
        std::vector<std::pair<int, int>> pts;  // endpoints + bends
    };
    std::vector<EdgeRoute> edges;
};

struct GridMetrics {
    int width = 0, height = 0;
    int half_perimeter = 0;
    long long area = 0;
    int bends = 0;
};

}  // namespace ortho
