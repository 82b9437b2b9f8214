#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystals/crystal.hpp"

namespace crystals {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Crystal graph: vertices in canonical (encoding-sorted) order, directed
// edges (src, dst, label) with src/dst as vertex indices.  An edge (b,b',i)
// is present iff f_i(b) = b'.
struct EdgeLabeledGraph {
    std::vector<std::string> vertices;
    std::vector<std::array<int, 3>> edges;  // {src, dst, label}

    friend bool operator==(const EdgeLabeledGraph&, const EdgeLabeledGraph&) = default;
};

// BFS closure of the seeds under f_i and e_i for i in labels.
EdgeLabeledGraph build_graph(const FiniteCrystal& B,
                             const std::vector<FiniteCrystal::Elem>& seeds,
                             const std::vector<int>& labels, std::size_t budget = 1000000);

std::string graph_to_dot(const EdgeLabeledGraph& g);
std::string graph_to_json(const EdgeLabeledGraph& g);

}  // namespace crystals
