#include "crystals/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace crystals {

EdgeLabeledGraph build_graph(const FiniteCrystal& B,
                             const std::vector<FiniteCrystal::Elem>& seeds,
                             const std::vector<int>& labels, std::size_t budget) {
    using Elem = FiniteCrystal::Elem;
    std::map<std::string, Elem> seen;
    std::vector<Elem> frontier;
    for (const auto& s : seeds) {
        B.check_member(s);
        if (seen.emplace(B.encode(s), s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const auto& b : frontier) {
            for (int i : labels) {
                for (char op : {'f', 'e'}) {
                    auto r = (op == 'f') ? B.f(i, b) : B.e(i, b);
                    if (!r) continue;
                    if (seen.emplace(B.encode(*r), *r).second) {
                        if (seen.size() > budget)
                            throw BudgetError("graph closure exceeded vertex budget");
                        next.push_back(*r);
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    EdgeLabeledGraph g;
    std::map<std::string, int> index;
    for (const auto& [enc, b] : seen) {
        index.emplace(enc, static_cast<int>(g.vertices.size()));
        g.vertices.push_back(enc);
    }
    for (const auto& [enc, b] : seen) {
        for (int i : labels) {
            if (auto r = B.f(i, b))
                g.edges.push_back({index.at(enc), index.at(B.encode(*r)), i});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::string graph_to_dot(const EdgeLabeledGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
    for (const auto& [src, dst, label] : g.edges)
        os << "  \"" << g.vertices[src] << "\" -> \"" << g.vertices[dst]
           << "\" [label=\"" << label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const EdgeLabeledGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& [src, dst, label] : g.edges)
        j["edges"].push_back({g.vertices[src], g.vertices[dst], label});
    return j.dump(2);
}

}  // namespace crystals
