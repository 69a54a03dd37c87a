#include "optonet/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <unordered_set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "optonet/csv.hpp"
#include "optonet/errors.hpp"

namespace optonet {

std::string_view to_string(Provenance p) {
    return p == Provenance::real ? "real" : "synthetic";
}

namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

std::int64_t parse_int(const std::string& field, std::size_t row, const char* what) {
    std::int64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw ParseError("non-numeric field", row, std::string(what) + " '" + field + "'");
    }
    return value;
}

double parse_double(const std::string& field, std::size_t row, const char* what) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw ParseError("non-numeric field", row, std::string(what) + " '" + field + "'");
    }
    return value;
}

std::string fmt_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::vector<std::string> split_header(std::string_view header) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = header.find(',', start);
        if (comma == std::string_view::npos) {
            out.emplace_back(header.substr(start));
            break;
        }
        out.emplace_back(header.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void require_header(const std::vector<csv::Row>& rows, std::string_view expected,
                    const char* which) {
    if (rows.empty()) {
        throw ParseError("malformed header", 1, std::string(which) + " file is empty");
    }
    const auto expected_fields = split_header(expected);
    if (rows.front().fields != expected_fields) {
        throw ParseError("malformed header", rows.front().line,
                         std::string(which) + " header must be '" + std::string(expected) + "'");
    }
}

// disc/low bookkeeping shared by bridges, articulation points and
// biconnected components. One DFS over the dense graph.
struct LowlinkAnalysis {
    std::vector<std::size_t> bridges;          // edge indices
    std::vector<std::size_t> cut_vertices;     // dense indices, ascending
    std::vector<std::size_t> edge_component;   // per edge, dense labels
    std::size_t component_count = 0;
};

LowlinkAnalysis lowlink_analysis(const Topology& t) {
    const std::size_t n = t.node_count();
    const std::size_t m = t.edge_count();

    // Incidence lists: (neighbor, edge index).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inc(n);
    for (std::size_t e = 0; e < m; ++e) {
        const auto& de = t.dense_edges()[e];
        inc[de.u].emplace_back(de.v, e);
        inc[de.v].emplace_back(de.u, e);
    }

    LowlinkAnalysis out;
    out.edge_component.assign(m, 0);
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::vector<bool> visited(n, false), is_cut(n, false);
    std::vector<std::size_t> edge_stack;
    std::size_t timer = 1;

    // Iterative DFS; each frame remembers its position in the incidence list.
    struct Frame {
        std::size_t node;
        std::size_t parent_edge;
        std::size_t next = 0;
        std::size_t children = 0;
    };

    std::vector<Frame> stack;
    constexpr auto kNone = static_cast<std::size_t>(-1);
    stack.push_back({0, kNone});
    visited[0] = true;
    disc[0] = low[0] = timer++;

    while (!stack.empty()) {
        Frame& frame = stack.back();
        const std::size_t u = frame.node;
        if (frame.next < inc[u].size()) {
            const auto [v, e] = inc[u][frame.next++];
            if (e == frame.parent_edge) continue;
            if (!visited[v]) {
                ++frame.children;
                visited[v] = true;
                disc[v] = low[v] = timer++;
                edge_stack.push_back(e);
                stack.push_back({v, e});
            } else if (disc[v] < disc[u]) {
                edge_stack.push_back(e);
                if (disc[v] < low[u]) low[u] = disc[v];
            }
            continue;
        }

        // u is finished; fold into the parent.
        stack.pop_back();
        if (stack.empty()) {
            if (frame.children >= 2) is_cut[u] = true;
            break;
        }
        Frame& parent = stack.back();
        const std::size_t p = parent.node;
        if (low[u] < low[p]) low[p] = low[u];
        if (low[u] > disc[p]) out.bridges.push_back(frame.parent_edge);
        if (low[u] >= disc[p]) {
            // parent is a cut vertex unless it is the root (root handled above)
            if (stack.size() > 1) is_cut[p] = true;
            // Pop one biconnected component off the edge stack.
            while (true) {
                const std::size_t e = edge_stack.back();
                edge_stack.pop_back();
                out.edge_component[e] = out.component_count;
                if (e == frame.parent_edge) break;
            }
            ++out.component_count;
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        if (is_cut[v]) out.cut_vertices.push_back(v);
    }
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

}  // namespace

Topology Topology::create(std::string name, std::vector<Node> nodes, std::vector<Edge> edges,
                          Provenance provenance) {
    if (name.empty() || name.find('/') != std::string::npos ||
        name.find('\\') != std::string::npos || name.find('\0') != std::string::npos) {
        throw InputError("topology: name must be non-empty and free of path separators");
    }
    if (nodes.size() < 2) throw InputError("topology '" + name + "': needs at least 2 nodes");
    if (edges.empty()) throw InputError("topology '" + name + "': needs at least 1 edge");

    Topology t;
    t.name_ = std::move(name);
    t.provenance_ = provenance;

    t.id_to_index_.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& node = nodes[i];
        if (node.id <= 0) {
            throw InputError("topology '" + t.name_ + "': node id " + std::to_string(node.id) +
                             " must be positive");
        }
        if (!t.id_to_index_.emplace(node.id, i).second) {
            throw InputError("topology '" + t.name_ + "': duplicate node id " +
                             std::to_string(node.id));
        }
        geo::make_geo_point(node.location.latitude_deg, node.location.longitude_deg);
    }

    t.adjacency_.assign(nodes.size(), {});
    t.dense_edges_.reserve(edges.size());
    std::unordered_set<std::int64_t> edge_ids;
    std::unordered_set<std::uint64_t> pairs;
    edge_ids.reserve(edges.size());
    pairs.reserve(edges.size());

    for (const Edge& edge : edges) {
        if (edge.id <= 0) {
            throw InputError("topology '" + t.name_ + "': edge id " + std::to_string(edge.id) +
                             " must be positive");
        }
        if (!edge_ids.insert(edge.id).second) {
            throw InputError("topology '" + t.name_ + "': duplicate edge id " +
                             std::to_string(edge.id));
        }
        auto su = t.id_to_index_.find(edge.source);
        auto sv = t.id_to_index_.find(edge.destination);
        if (su == t.id_to_index_.end() || sv == t.id_to_index_.end()) {
            throw InputError("topology '" + t.name_ + "': edge " + std::to_string(edge.id) +
                             " references a missing node");
        }
        if (su->second == sv->second) {
            throw InputError("topology '" + t.name_ + "': edge " + std::to_string(edge.id) +
                             " is a self-loop");
        }
        if (!std::isfinite(edge.length_km) || edge.length_km <= 0.0) {
            throw InputError("topology '" + t.name_ + "': edge " + std::to_string(edge.id) +
                             " has non-positive length");
        }
        if (!pairs.insert(pair_key(su->second, sv->second)).second) {
            throw InputError("topology '" + t.name_ + "': parallel edge " +
                             std::to_string(edge.id));
        }
        std::size_t u = su->second, v = sv->second;
        t.adjacency_[u].push_back(v);
        t.adjacency_[v].push_back(u);
        if (u > v) std::swap(u, v);
        t.dense_edges_.push_back({u, v, edge.length_km});
    }

    for (auto& list : t.adjacency_) std::sort(list.begin(), list.end());

    // Connectivity.
    std::vector<bool> seen(nodes.size(), false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : t.adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push(v);
            }
        }
    }
    if (reached != nodes.size()) {
        throw InputError("topology '" + t.name_ + "': disconnected graph (" +
                         std::to_string(reached) + " of " + std::to_string(nodes.size()) +
                         " nodes reachable)");
    }

    t.nodes_ = std::move(nodes);
    t.edges_ = std::move(edges);
    return t;
}

std::size_t Topology::index_of(std::int64_t node_id) const {
    auto it = id_to_index_.find(node_id);
    if (it == id_to_index_.end()) {
        throw InputError("topology '" + name_ + "': unknown node id " + std::to_string(node_id));
    }
    return it->second;
}

bool Topology::has_edge(std::size_t u, std::size_t v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

Topology read_topology(std::istream& nodes_csv, std::istream& edges_csv, std::string name,
                       Provenance provenance) {
    const auto node_rows = csv::read(nodes_csv);
    require_header(node_rows, kNodesHeader, "nodes");
    const auto edge_rows = csv::read(edges_csv);
    require_header(edge_rows, kEdgesHeader, "edges");

    std::vector<Node> nodes;
    std::unordered_set<std::int64_t> node_ids;
    nodes.reserve(node_rows.size() - 1);
    for (std::size_t r = 1; r < node_rows.size(); ++r) {
        const auto& row = node_rows[r];
        if (row.fields.size() != 5) {
            throw ParseError("bad field count", row.line,
                             "node row has " + std::to_string(row.fields.size()) +
                                 " fields, expected 5");
        }
        Node node;
        node.id = parse_int(row.fields[0], row.line, "node id");
        if (node.id <= 0) {
            throw ParseError("invalid value", row.line, "node id must be positive");
        }
        if (!node_ids.insert(node.id).second) {
            throw ParseError("duplicate id", row.line,
                             "node id " + std::to_string(node.id) + " already defined");
        }
        const double lat = parse_double(row.fields[1], row.line, "latitude");
        const double lon = parse_double(row.fields[2], row.line, "longitude");
        try {
            node.location = geo::make_geo_point(lat, lon);
        } catch (const InputError& e) {
            throw ParseError("invalid value", row.line, e.what());
        }
        node.place_name = row.fields[3];
        node.country = row.fields[4];
        nodes.push_back(std::move(node));
    }

    std::vector<Edge> edges;
    std::unordered_set<std::int64_t> edge_ids;
    std::set<std::pair<std::int64_t, std::int64_t>> pairs;
    edges.reserve(edge_rows.size() - 1);
    for (std::size_t r = 1; r < edge_rows.size(); ++r) {
        const auto& row = edge_rows[r];
        if (row.fields.size() != 4) {
            throw ParseError("bad field count", row.line,
                             "edge row has " + std::to_string(row.fields.size()) +
                                 " fields, expected 4");
        }
        Edge edge;
        edge.id = parse_int(row.fields[0], row.line, "edge id");
        edge.source = parse_int(row.fields[1], row.line, "edge source");
        edge.destination = parse_int(row.fields[2], row.line, "edge destination");
        edge.length_km = parse_double(row.fields[3], row.line, "edge length");
        if (edge.id <= 0) {
            throw ParseError("invalid value", row.line, "edge id must be positive");
        }
        if (!edge_ids.insert(edge.id).second) {
            throw ParseError("duplicate id", row.line,
                             "edge id " + std::to_string(edge.id) + " already defined");
        }
        if (!node_ids.count(edge.source) || !node_ids.count(edge.destination)) {
            throw ParseError("dangling endpoint", row.line,
                             "edge " + std::to_string(edge.id) + " references a missing node");
        }
        if (edge.source == edge.destination) {
            throw ParseError("self-loop", row.line,
                             "edge " + std::to_string(edge.id) + " connects a node to itself");
        }
        if (!pairs.insert(std::minmax(edge.source, edge.destination)).second) {
            throw ParseError("parallel edge", row.line,
                             "edge " + std::to_string(edge.id) + " duplicates an existing link");
        }
        if (!std::isfinite(edge.length_km) || edge.length_km <= 0.0) {
            throw ParseError("invalid value", row.line, "edge length must be positive");
        }
        edges.push_back(edge);
    }

    return Topology::create(std::move(name), std::move(nodes), std::move(edges), provenance);
}

void write_topology(const Topology& t, std::ostream& nodes_csv, std::ostream& edges_csv) {
    nodes_csv << kNodesHeader << '\n';
    for (const Node& node : t.nodes()) {
        nodes_csv << csv::write_row({std::to_string(node.id),
                                     fmt_fixed(node.location.latitude_deg, 6),
                                     fmt_fixed(node.location.longitude_deg, 6), node.place_name,
                                     node.country})
                  << '\n';
    }
    edges_csv << kEdgesHeader << '\n';
    for (const Edge& edge : t.edges()) {
        edges_csv << csv::write_row({std::to_string(edge.id), std::to_string(edge.source),
                                     std::to_string(edge.destination),
                                     fmt_fixed(edge.length_km, 2)})
                  << '\n';
    }
}

spectral::SymmetricMatrix adjacency_matrix(const Topology& t) {
    spectral::SymmetricMatrix a(t.node_count());
    for (const auto& de : t.dense_edges()) a.set(de.u, de.v, 1.0);
    return a;
}

std::vector<std::size_t> bridge_edge_indices(const Topology& t) {
    return lowlink_analysis(t).bridges;
}

std::vector<std::size_t> articulation_points(const Topology& t) {
    return lowlink_analysis(t).cut_vertices;
}

std::vector<std::size_t> biconnected_component_ids(const Topology& t) {
    return lowlink_analysis(t).edge_component;
}

std::size_t biconnected_component_count(const Topology& t) {
    return lowlink_analysis(t).component_count;
}

StructureFlags structure_flags(const Topology& t) {
    const auto analysis = lowlink_analysis(t);
    StructureFlags flags;
    flags.bridge_count = analysis.bridges.size();
    flags.has_bridge = !analysis.bridges.empty();
    flags.is_biconnected = t.node_count() >= 3 && analysis.cut_vertices.empty();

    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(t.node_count());
    for (const auto& de : t.dense_edges()) boost::add_edge(de.u, de.v, bg);
    flags.is_planar = boost::boyer_myrvold_planarity_test(bg);
    return flags;
}

}  // namespace optonet
