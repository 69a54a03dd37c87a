// Python face of the toolkit: topology IO, the metric vector, generation,
// and the distribution-comparison test.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "optonet/errors.hpp"
#include "optonet/generator.hpp"
#include "optonet/geo.hpp"
#include "optonet/io.hpp"
#include "optonet/metrics.hpp"
#include "optonet/spectral.hpp"
#include "optonet/stats.hpp"
#include "optonet/topology.hpp"

namespace py = pybind11;
using namespace optonet;

namespace {

Provenance provenance_from_string(const std::string& text) {
    if (text == "real") return Provenance::real;
    if (text == "synthetic") return Provenance::synthetic;
    throw InputError("provenance must be 'real' or 'synthetic', got '" + text + "'");
}

Topology topology_from_files(const std::string& nodes_path, const std::string& edges_path,
                             const std::string& name, const std::string& provenance) {
    return io::load_topology(io::CorpusEntry{name, nodes_path, edges_path},
                             provenance_from_string(provenance));
}

Topology topology_from_data(
    const std::string& name,
    const std::vector<std::tuple<std::int64_t, double, double, std::string, std::string>>& nodes,
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, double>>& edges,
    const std::string& provenance) {
    std::vector<Node> node_list;
    node_list.reserve(nodes.size());
    for (const auto& [id, lat, lon, place, country] : nodes) {
        node_list.push_back(Node{id, geo::make_geo_point(lat, lon), place, country});
    }
    std::vector<Edge> edge_list;
    edge_list.reserve(edges.size());
    for (const auto& [id, source, destination, km] : edges) {
        edge_list.push_back(Edge{id, source, destination, km});
    }
    return Topology::create(name, std::move(node_list), std::move(edge_list),
                            provenance_from_string(provenance));
}

py::dict metric_dict(const Topology& t) {
    const auto v = metrics::metric_vector(t);
    py::dict out;
    for (std::size_t f = 0; f < metrics::MetricVector::kFieldCount; ++f) {
        out[py::str(std::string(metrics::MetricVector::field_names()[f]))] = v.field(f);
    }
    return out;
}

py::dict flags_dict(const Topology& t) {
    const auto f = structure_flags(t);
    py::dict out;
    out["is_planar"] = f.is_planar;
    out["has_bridge"] = f.has_bridge;
    out["is_biconnected"] = f.is_biconnected;
    out["bridge_count"] = f.bridge_count;
    return out;
}

Topology generate_py(int n, double density, const std::string& region, std::uint64_t seed,
                     std::string name, double theta) {
    gen::GenerationSpec spec;
    spec.node_count = n;
    spec.density_multiplier = density;
    spec.region = geo::builtin_region(geo::region_scale_from_string(region));
    spec.seed = seed;
    spec.theta = theta;
    if (name.empty()) name = "synthetic_" + region + "_n" + std::to_string(n);
    spec.name = std::move(name);
    return gen::generate(spec);
}

py::dict ks2_py(std::vector<double> a, std::vector<double> b) {
    const auto r = stats::ks2(std::move(a), std::move(b));
    py::dict out;
    out["statistic"] = r.statistic;
    out["p_value"] = r.p_value;
    out["n_a"] = r.n_a;
    out["n_b"] = r.n_b;
    return out;
}

std::vector<double> laplacian_spectrum_py(const Topology& t) {
    return spectral::eigenvalues_symmetric(spectral::laplacian(adjacency_matrix(t))).eigenvalues;
}

std::vector<double> normalized_laplacian_spectrum_py(const Topology& t) {
    return spectral::eigenvalues_symmetric(spectral::normalized_laplacian(adjacency_matrix(t)))
        .eigenvalues;
}

double wsd_py(std::vector<double> eigenvalues) {
    return spectral::wsd(spectral::Spectrum{std::move(eigenvalues)});
}

}  // namespace

PYBIND11_MODULE(_optonet, m) {
    m.doc() = "Optical core network topology toolkit";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ComputeError>(m, "ComputeError", PyExc_RuntimeError);

    py::class_<Topology>(m, "Topology")
        .def_static("from_files", &topology_from_files, py::arg("nodes_csv"),
                    py::arg("edges_csv"), py::arg("name"), py::arg("provenance") = "real",
                    "Parse a nodes/edges csv pair")
        .def_static("from_data", &topology_from_data, py::arg("name"), py::arg("nodes"),
                    py::arg("edges"), py::arg("provenance") = "real",
                    "Build from (id, lat, lon, place, country) and (id, src, dst, km) tuples")
        .def_property_readonly("name", &Topology::name)
        .def_property_readonly("node_count", &Topology::node_count)
        .def_property_readonly("edge_count", &Topology::edge_count)
        .def_property_readonly("provenance",
                               [](const Topology& t) {
                                   return std::string(to_string(t.provenance()));
                               })
        .def_property_readonly("nodes",
                               [](const Topology& t) {
                                   std::vector<std::tuple<std::int64_t, double, double,
                                                          std::string, std::string>>
                                       out;
                                   out.reserve(t.node_count());
                                   for (const auto& node : t.nodes()) {
                                       out.emplace_back(node.id, node.location.latitude_deg,
                                                        node.location.longitude_deg,
                                                        node.place_name, node.country);
                                   }
                                   return out;
                               })
        .def_property_readonly(
            "edges",
            [](const Topology& t) {
                std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, double>> out;
                out.reserve(t.edge_count());
                for (const auto& edge : t.edges()) {
                    out.emplace_back(edge.id, edge.source, edge.destination, edge.length_km);
                }
                return out;
            })
        .def(
            "to_files",
            [](const Topology& t, const std::string& dir, bool force) {
                io::write_topology_files(t, dir, force);
            },
            py::arg("directory"), py::arg("force") = false,
            "Write nodes_<name>.csv and edges_<name>.csv under directory")
        .def("metrics", &metric_dict, "The full named metric vector")
        .def("structure_flags", &flags_dict, "Planarity, bridges, survivability")
        .def("__repr__", [](const Topology& t) {
            std::ostringstream out;
            out << "Topology(name='" << t.name() << "', n=" << t.node_count()
                << ", m=" << t.edge_count() << ")";
            return out.str();
        });

    m.def(
        "haversine_km",
        [](double lat_a, double lon_a, double lat_b, double lon_b) {
            return geo::haversine_km(geo::make_geo_point(lat_a, lon_a),
                                     geo::make_geo_point(lat_b, lon_b));
        },
        py::arg("lat_a"), py::arg("lon_a"), py::arg("lat_b"), py::arg("lon_b"),
        "Great-circle distance in km");
    m.def("fibre_length_km", &geo::fibre_length_km, py::arg("geodesic_km"),
          "Fibre length implied by a geodesic distance");

    m.def("generate", &generate_py, py::arg("n"), py::arg("density") = 1.2,
          py::arg("region") = "large", py::arg("seed") = 42, py::arg("name") = "",
          py::arg("theta") = gen::kDefaultTheta,
          "Generate one synthetic topology (deterministic in seed)");
    m.def(
        "generate_position_matched",
        [](const Topology& real, int replicates, std::uint64_t seed) {
            return gen::generate_position_matched(real, replicates, seed);
        },
        py::arg("real"), py::arg("replicates"), py::arg("seed") = 42,
        "Regrow a survivable real network's node set; one topology per replicate");

    m.def("ks2", &ks2_py, py::arg("a"), py::arg("b"),
          "Two-sample Kolmogorov-Smirnov statistic and p-value");
    m.def("laplacian_spectrum", &laplacian_spectrum_py, py::arg("topology"),
          "Ascending Laplacian eigenvalues");
    m.def("normalized_laplacian_spectrum", &normalized_laplacian_spectrum_py,
          py::arg("topology"), "Ascending normalized-Laplacian eigenvalues");
    m.def("wsd", &wsd_py, py::arg("normalized_laplacian_eigenvalues"),
          "Weighted spectral distribution of a normalized-Laplacian spectrum");
}
