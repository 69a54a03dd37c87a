#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "optonet/errors.hpp"
#include "optonet/topology.hpp"
#include "test_support.hpp"

using namespace optonet;
namespace ts = test_support;

namespace {

Topology from_csv(const std::string& nodes, const std::string& edges) {
    std::istringstream n(nodes), e(edges);
    return read_topology(n, e, "t", Provenance::real);
}

const char* kTwoNodes =
    "Node_ID,Latitude,Longitude,Location Name,Country\n"
    "1,48.209100,16.372900,Vienna,Austria\n"
    "3,50.112200,8.684200,Frankfurt,Germany\n";

}  // namespace

TEST_CASE("reference sample rows parse with exact values") {
    const auto t = from_csv(kTwoNodes,
                            "Edge_ID,Source,Destination,Computed Length (km)\n"
                            "1,1,3,1205.75\n");
    REQUIRE(t.node_count() == 2);
    REQUIRE(t.edge_count() == 1);
    const auto& vienna = t.nodes()[0];
    CHECK(vienna.id == 1);
    CHECK(vienna.location.latitude_deg == 48.2091);
    CHECK(vienna.location.longitude_deg == 16.3729);
    CHECK(vienna.place_name == "Vienna");
    CHECK(vienna.country == "Austria");
    CHECK(t.edges()[0].length_km == 1205.75);
    CHECK(t.edges()[0].source == 1);
    CHECK(t.edges()[0].destination == 3);
}

TEST_CASE("write -> read round-trip is exact, headers byte-for-byte") {
    const auto t = ts::gold9();
    std::ostringstream nodes_out, edges_out;
    write_topology(t, nodes_out, edges_out);

    CHECK(nodes_out.str().substr(0, nodes_out.str().find('\n')) == kNodesHeader);
    CHECK(edges_out.str().substr(0, edges_out.str().find('\n')) == kEdgesHeader);
    // Lengths keep their two-decimal file form.
    CHECK(edges_out.str().find("350.90") != std::string::npos);

    const auto back = from_csv(nodes_out.str(), edges_out.str());
    REQUIRE(back.node_count() == t.node_count());
    REQUIRE(back.edge_count() == t.edge_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        CHECK(back.nodes()[i].id == t.nodes()[i].id);
        CHECK(back.nodes()[i].location.latitude_deg ==
              doctest::Approx(t.nodes()[i].location.latitude_deg).epsilon(1e-9));
    }
    for (std::size_t i = 0; i < t.edge_count(); ++i) {
        CHECK(back.edges()[i].source == t.edges()[i].source);
        CHECK(back.edges()[i].destination == t.edges()[i].destination);
        CHECK(back.edges()[i].length_km == t.edges()[i].length_km);
    }

    // One normalization pass is idempotent: re-exporting reproduces bytes.
    std::ostringstream nodes_again, edges_again;
    write_topology(back, nodes_again, edges_again);
    CHECK(nodes_again.str() == nodes_out.str());
    CHECK(edges_again.str() == edges_out.str());
}

TEST_CASE("reader rejects each malformation with its own kind") {
    const std::string eh = "Edge_ID,Source,Destination,Computed Length (km)\n";
    const auto kind_of = [&](const std::string& nodes, const std::string& edges) {
        try {
            from_csv(nodes, edges);
            return std::string("no error");
        } catch (const ParseError& e) {
            return e.kind();
        }
    };
    CHECK(kind_of("Wrong,Header\n1,0,0,x,y\n", eh + "1,1,2,5\n") == "malformed header");
    CHECK(kind_of(std::string(kTwoNodes) + "abc,0,0,x,y\n", eh + "1,1,3,5\n") ==
          "non-numeric field");
    CHECK(kind_of(std::string(kTwoNodes) + "1,10,10,dup,dup\n", eh + "1,1,3,5\n") ==
          "duplicate id");
    CHECK(kind_of(kTwoNodes, eh + "1,1,9,5\n") == "dangling endpoint");
    CHECK(kind_of(kTwoNodes, eh + "1,1,1,5\n") == "self-loop");
    CHECK(kind_of(kTwoNodes, eh + "1,1,3,5\n2,3,1,5\n") == "parallel edge");
    CHECK(kind_of(kTwoNodes, eh + "1,1,3\n") == "bad field count");
    CHECK(kind_of(kTwoNodes, eh + "1,1,3,-5\n") == "invalid value");
    CHECK(kind_of(kTwoNodes, eh + "1,1,3,zero\n") == "non-numeric field");
    // Empty edges file: two nodes cannot be connected.
    CHECK_THROWS_WITH_AS(from_csv(kTwoNodes, eh), doctest::Contains("needs at least 1 edge"),
                         InputError);
    // Row numbers point at the offending line.
    try {
        from_csv(kTwoNodes, eh + "1,1,3,5\n2,1,1,5\n");
        FAIL("expected self-loop");
    } catch (const ParseError& e) {
        CHECK(e.row() == 3);
    }
}

TEST_CASE("construction invariants") {
    using P = std::pair<int, int>;
    CHECK_THROWS_AS(ts::build("one", 1, {}), InputError);
    CHECK_THROWS_AS(ts::build("noedges", 3, {}), InputError);
    CHECK_THROWS_AS(ts::build("selfloop", 3, {P{1, 1}, P{2, 3}, P{1, 2}}), InputError);
    CHECK_THROWS_AS(ts::build("parallel", 3, {P{1, 2}, P{2, 1}, P{2, 3}}), InputError);
    CHECK_THROWS_AS(ts::build("dangling", 3, {P{1, 2}, P{2, 9}}), InputError);
    CHECK_THROWS_AS(ts::build("split", 4, {P{1, 2}, P{3, 4}}), InputError);
    CHECK_THROWS_AS(ts::build("badlen", 2, {P{1, 2}}, {0.0}), InputError);
    CHECK_THROWS_AS(ts::build("badlen", 2, {P{1, 2}}, {-3.0}), InputError);
    CHECK_THROWS_AS(ts::build("nan", 2, {P{1, 2}}, {std::nan("")}), InputError);
    CHECK_THROWS_AS(ts::build("slash/name", 2, {P{1, 2}}), InputError);
    CHECK_THROWS_AS(ts::build("", 2, {P{1, 2}}), InputError);

    const auto t = ts::build("ok", 2, {P{1, 2}}, {5.25});
    CHECK(t.provenance() == Provenance::real);
    CHECK(t.index_of(2) == 1);
    CHECK_THROWS_AS(t.index_of(99), InputError);
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(1, 0));
}

TEST_CASE("adjacency matrix matches the edge set") {
    const auto k3 = ts::complete_graph(3);
    const auto a3 = adjacency_matrix(k3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(a3.at(i, j) == (i == j ? 0.0 : 1.0));

    const auto p3 = ts::path_graph(3);
    const auto ap = adjacency_matrix(p3);
    CHECK(ap.at(0, 2) == 0.0);
    CHECK(ap.at(0, 1) == 1.0);
    CHECK(ap.at(1, 2) == 1.0);

    Rng rng(55);
    const auto t = ts::random_connected(rng, 12, 0.3);
    const auto a = adjacency_matrix(t);
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        double row_sum = 0;
        for (std::size_t j = 0; j < t.node_count(); ++j) {
            CHECK(a.at(i, j) == a.at(j, i));
            row_sum += a.at(i, j);
        }
        CHECK(row_sum == static_cast<double>(t.degree(i)));
    }
}

TEST_CASE("structure flags on known families") {
    const auto c5 = structure_flags(ts::cycle_graph(5));
    CHECK(c5.is_planar);
    CHECK_FALSE(c5.has_bridge);
    CHECK(c5.bridge_count == 0);
    CHECK(c5.is_biconnected);

    const auto s4 = structure_flags(ts::star_graph(4));
    CHECK(s4.is_planar);
    CHECK(s4.has_bridge);
    CHECK(s4.bridge_count == 3);
    CHECK_FALSE(s4.is_biconnected);

    CHECK_FALSE(structure_flags(ts::complete_graph(5)).is_planar);
    CHECK_FALSE(structure_flags(ts::complete_bipartite_33()).is_planar);
    CHECK(structure_flags(ts::complete_graph(4)).is_planar);

    // Petersen graph: 3-regular, girth 5, famously non-planar.
    const auto petersen = ts::build(
        "petersen", 10,
        {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 8}, {8, 10}, {10, 7},
         {7, 9}, {9, 6}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
    const auto pf = structure_flags(petersen);
    CHECK_FALSE(pf.is_planar);
    CHECK(pf.is_biconnected);
}

TEST_CASE("bridges and articulation points on hand graphs") {
    // Two triangles sharing node 3 (bow tie): no bridges, one cut vertex.
    const auto bowtie =
        ts::build("bowtie", 5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(bridge_edge_indices(bowtie).empty());
    const auto cuts = articulation_points(bowtie);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0] == bowtie.index_of(3));
    CHECK(biconnected_component_count(bowtie) == 2);
    CHECK_FALSE(structure_flags(bowtie).is_biconnected);

    // P4: every edge a bridge, both middle nodes cut vertices.
    const auto p4 = ts::path_graph(4);
    CHECK(bridge_edge_indices(p4).size() == 3);
    CHECK(articulation_points(p4).size() == 2);
    CHECK(biconnected_component_count(p4) == 3);

    // Edge labels group by component: the bow tie's triangles get 2 labels.
    const auto labels = biconnected_component_ids(bowtie);
    std::set<std::size_t> distinct(labels.begin(), labels.end());
    CHECK(distinct.size() == 2);
}

TEST_CASE("bridges, cut vertices, planarity agree with exhaustive checks") {
    Rng rng(333);
    int nonplanar_seen = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 4 + static_cast<int>(rng.index(5));  // 4..8
        const auto t = ts::random_connected(rng, n, rng.uniform(0.05, 0.75));

        const auto bridges = bridge_edge_indices(t);
        for (std::size_t e = 0; e < t.edge_count(); ++e) {
            const bool is_bridge =
                std::find(bridges.begin(), bridges.end(), e) != bridges.end();
            CHECK(is_bridge == !ts::connected_without_edge(t, e));
        }

        const auto cuts = articulation_points(t);
        for (std::size_t v = 0; v < t.node_count(); ++v) {
            const bool is_cut = std::find(cuts.begin(), cuts.end(), v) != cuts.end();
            CHECK(is_cut == !ts::connected_without_node(t, v));
        }

        const auto flags = structure_flags(t);
        CHECK(flags.is_planar == ts::brute_planar(t));
        if (!flags.is_planar) ++nonplanar_seen;
        CHECK(flags.has_bridge == !bridges.empty());
        CHECK(flags.bridge_count == bridges.size());
        CHECK(flags.is_biconnected == (t.node_count() >= 3 && cuts.empty()));
        if (flags.is_biconnected) CHECK_FALSE(flags.has_bridge);
        // Euler bound: planar simple graphs cannot exceed 3n - 6 edges.
        if (flags.is_planar && t.node_count() >= 3) {
            CHECK(t.edge_count() <= 3 * t.node_count() - 6);
        }
    }
    CHECK(nonplanar_seen > 0);  // the sweep actually exercised both verdicts
}
