#include "optonet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "optonet/errors.hpp"

namespace optonet::metrics {

const std::array<std::string_view, MetricVector::kFieldCount>& MetricVector::field_names() {
    static const std::array<std::string_view, kFieldCount> names = {
        "number_of_nodes",
        "number_of_edges",
        "average_node_degree",
        "average_clustering_coefficient",
        "network_density",
        "max_node_betweenness",
        "avg_node_betweenness",
        "max_edge_betweenness",
        "avg_edge_betweenness",
        "diameter_hops",
        "aspl_hops",
        "global_efficiency",
        "normalized_spectral_radius",
        "normalized_algebraic_connectivity",
        "normalized_wsd",
        "aspl_km",
        "avg_link_length_km",
        "std_shortest_path_km",
        "diameter_km",
        "normalized_avg_link_length",
        "normalized_diameter_km",
    };
    return names;
}

double MetricVector::field(std::size_t index) const {
    switch (index) {
        case 0: return number_of_nodes;
        case 1: return number_of_edges;
        case 2: return average_node_degree;
        case 3: return average_clustering_coefficient;
        case 4: return network_density;
        case 5: return max_node_betweenness;
        case 6: return avg_node_betweenness;
        case 7: return max_edge_betweenness;
        case 8: return avg_edge_betweenness;
        case 9: return diameter_hops;
        case 10: return aspl_hops;
        case 11: return global_efficiency;
        case 12: return normalized_spectral_radius;
        case 13: return normalized_algebraic_connectivity;
        case 14: return normalized_wsd;
        case 15: return aspl_km;
        case 16: return avg_link_length_km;
        case 17: return std_shortest_path_km;
        case 18: return diameter_km;
        case 19: return normalized_avg_link_length;
        case 20: return normalized_diameter_km;
    }
    throw InputError("metrics: field index out of range");
}

double MetricVector::field(std::string_view name) const {
    const auto& names = field_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return field(i);
    }
    throw InputError("metrics: unknown field '" + std::string(name) + "'");
}

DegreeStats degree_stats(const Topology& t) {
    DegreeStats out;
    out.degrees.resize(t.node_count());
    double sum = 0.0;
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        out.degrees[i] = t.degree(i);
        sum += static_cast<double>(out.degrees[i]);
    }
    out.average = sum / static_cast<double>(t.node_count());
    return out;
}

std::vector<std::vector<int>> hop_paths(const Topology& t) {
    const std::size_t n = t.node_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::vector<std::size_t> frontier;
    for (std::size_t s = 0; s < n; ++s) {
        auto& ds = dist[s];
        ds[s] = 0;
        frontier.assign(1, s);
        int level = 0;
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            ++level;
            for (std::size_t u : frontier) {
                for (std::size_t v : t.neighbors(u)) {
                    if (ds[v] < 0) {
                        ds[v] = level;
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return dist;
}

KmPaths km_paths(const Topology& t) {
    const std::size_t n = t.node_count();

    std::vector<std::vector<std::pair<std::size_t, double>>> weighted(n);
    for (const auto& de : t.dense_edges()) {
        weighted[de.u].emplace_back(de.v, de.length_km);
        weighted[de.v].emplace_back(de.u, de.length_km);
    }

    KmPaths out;
    out.dist.assign(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
    using QueueItem = std::pair<double, std::size_t>;

    for (std::size_t s = 0; s < n; ++s) {
        auto& ds = out.dist[s];
        ds[s] = 0.0;
        std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> heap;
        heap.emplace(0.0, s);
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (d > ds[u]) continue;
            for (const auto& [v, w] : weighted[u]) {
                const double nd = d + w;
                if (nd < ds[v]) {
                    ds[v] = nd;
                    heap.emplace(nd, v);
                }
            }
        }
    }

    double sum = 0.0, sum_sq = 0.0, max_d = 0.0;
    const double pair_count = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = out.dist[i][j];
            sum += d;
            sum_sq += d * d;
            if (d > max_d) max_d = d;
        }
    }
    out.aspl_km = sum / pair_count;
    const double variance = std::max(0.0, sum_sq / pair_count - out.aspl_km * out.aspl_km);
    out.std_km = std::sqrt(variance);
    out.diameter_km = max_d;
    return out;
}

ClusteringStats clustering_coefficient(const Topology& t) {
    const std::size_t n = t.node_count();
    ClusteringStats out;
    out.per_node.assign(n, 0.0);
    double sum = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        const auto& nb = t.neighbors(u);
        const std::size_t d = nb.size();
        if (d < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                if (t.has_edge(nb[a], nb[b])) ++links;
            }
        }
        out.per_node[u] =
            2.0 * static_cast<double>(links) / (static_cast<double>(d) * (static_cast<double>(d) - 1.0));
        sum += out.per_node[u];
    }
    out.average = sum / static_cast<double>(n);
    return out;
}

BetweennessResult betweenness(const Topology& t) {
    const std::size_t n = t.node_count();
    const std::size_t m = t.edge_count();

    // Incidence lists carrying edge indices so edge accumulation lands in
    // edges() order directly.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inc(n);
    for (std::size_t e = 0; e < m; ++e) {
        const auto& de = t.dense_edges()[e];
        inc[de.u].emplace_back(de.v, e);
        inc[de.v].emplace_back(de.u, e);
    }

    std::vector<double> node_acc(n, 0.0), edge_acc(m, 0.0);
    std::vector<int> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> preds(n);  // (pred, edge)
    std::vector<std::size_t> order;
    order.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        std::queue<std::size_t> queue;
        queue.push(s);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            order.push_back(u);
            for (const auto& [v, e] : inc[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].emplace_back(u, e);
                }
            }
        }

        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t w = *it;
            for (const auto& [v, e] : preds[w]) {
                const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                delta[v] += c;
                edge_acc[e] += c;
            }
            if (w != s) node_acc[w] += delta[w];
        }
    }

    BetweennessResult out;
    const double dn = static_cast<double>(n);
    // The source loop visits each unordered pair from both ends, so the raw
    // sums are doubled; fold that into the pair-count normalisation.
    const double node_scale = n > 2 ? 1.0 / ((dn - 1.0) * (dn - 2.0)) : 0.0;
    const double edge_scale = 1.0 / (dn * (dn - 1.0));

    out.node.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.node[v] = node_acc[v] * node_scale;
    out.edge.resize(m);
    for (std::size_t e = 0; e < m; ++e) out.edge[e] = edge_acc[e] * edge_scale;

    out.max_node = *std::max_element(out.node.begin(), out.node.end());
    out.avg_node = std::accumulate(out.node.begin(), out.node.end(), 0.0) / dn;
    out.max_edge = *std::max_element(out.edge.begin(), out.edge.end());
    out.avg_edge = std::accumulate(out.edge.begin(), out.edge.end(), 0.0) / static_cast<double>(m);
    return out;
}

double global_efficiency(const Topology& t) {
    const auto dist = hop_paths(t);
    const std::size_t n = t.node_count();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) sum += 1.0 / static_cast<double>(dist[i][j]);
    }
    const double pairs = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    return sum / pairs;
}

MetricVector metric_vector(const Topology& t) {
    const auto dn = static_cast<double>(t.node_count());
    const auto dm = static_cast<double>(t.edge_count());

    MetricVector v;
    v.number_of_nodes = dn;
    v.number_of_edges = dm;
    v.average_node_degree = 2.0 * dm / dn;
    v.network_density = 2.0 * dm / (dn * (dn - 1.0));
    v.average_clustering_coefficient = clustering_coefficient(t).average;

    const auto bc = betweenness(t);
    v.max_node_betweenness = bc.max_node;
    v.avg_node_betweenness = bc.avg_node;
    v.max_edge_betweenness = bc.max_edge;
    v.avg_edge_betweenness = bc.avg_edge;

    const auto hops = hop_paths(t);
    const std::size_t n = t.node_count();
    double hop_sum = 0.0;
    int hop_max = 0;
    double eff_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int d = hops[i][j];
            hop_sum += d;
            eff_sum += 1.0 / static_cast<double>(d);
            if (d > hop_max) hop_max = d;
        }
    }
    const double pairs = dn * (dn - 1.0) / 2.0;
    v.diameter_hops = hop_max;
    v.aspl_hops = hop_sum / pairs;
    v.global_efficiency = eff_sum / pairs;

    const auto adjacency = adjacency_matrix(t);
    v.normalized_spectral_radius = spectral::spectral_radius(adjacency) / (dn - 1.0);
    v.normalized_algebraic_connectivity =
        spectral::algebraic_connectivity(spectral::laplacian(adjacency)) / dn;
    v.normalized_wsd = spectral::wsd(
        spectral::eigenvalues_symmetric(spectral::normalized_laplacian(adjacency)));

    const auto km = km_paths(t);
    v.aspl_km = km.aspl_km;
    v.diameter_km = km.diameter_km;
    v.std_shortest_path_km = km.std_km;

    double link_sum = 0.0;
    for (const auto& de : t.dense_edges()) link_sum += de.length_km;
    v.avg_link_length_km = link_sum / dm;
    v.normalized_avg_link_length = v.avg_link_length_km / v.diameter_km;

    double max_geodesic = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            max_geodesic = std::max(
                max_geodesic, geo::haversine_km(t.nodes()[i].location, t.nodes()[j].location));
        }
    }
    if (max_geodesic <= 0.0) {
        throw ComputeError("metrics '" + t.name() + "': all nodes share one location");
    }
    v.normalized_diameter_km = v.diameter_km / max_geodesic;
    return v;
}

}  // namespace optonet::metrics
