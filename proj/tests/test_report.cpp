#include <doctest.h>

#include "treelattice/fixtures.hpp"
#include "treelattice/report.hpp"

using namespace treelattice;

namespace {

CountTable triangle_table(int n_max) {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const ClassDescriptor k = class_of_closed_walk(g, walk_from_vertices(g, std::vector<Vertex>{0, 1, 2, 0}));
    return count_class(g, st, k, TreePath{st.path_from_base(g, k.start(g))}, n_max);
}

}  // namespace

TEST_CASE("CSV table") {
    const std::string csv = table_csv(triangle_table(8));
    CHECK(csv ==
          "n,count,normalized\n"
          "0,0,0\n1,0,0\n2,0,0\n3,1,1\n4,1,0.707106781187\n5,1,0.5\n6,1,0.353553390593\n7,3,0.75\n"
          "8,3,0.53033008589\n");
    CHECK(format_g12(1.0 / 3.0) == "0.333333333333");
    CHECK(format_g12(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("JSON count table") {
    const Json j = versioned("count", to_json(triangle_table(7)));
    auto it = j.begin();
    CHECK(it.key() == "schema_version");
    CHECK(j["schema_version"] == schema_version);
    CHECK(j["kind"] == "count");
    CHECK(j["mu"] == 3);
    CHECK(j["nu"] == 1);
    CHECK(j["num_vertices"] == 4);
    CHECK(j["q"] == 2);
    CHECK(j["budget"] == default_budget);
    CHECK(j["basepoint"].get<std::string>().rfind("base 0", 0) == 0);
    REQUIRE(j["table"].size() == 8);
    CHECK(j["table"][7]["count"] == 3);
    CHECK(j["table"][7]["normalized"].get<double>() == doctest::Approx(0.75));
}

TEST_CASE("JSON output is deterministic") {
    const std::string a = versioned("count", to_json(triangle_table(10))).dump(2);
    const std::string b = versioned("count", to_json(triangle_table(10))).dump(2);
    CHECK(a == b);
}

TEST_CASE("JSON asymptotics, validation, class, complex") {
    const Json r = to_json(constants(3, 1, 4, 2));
    CHECK(r["a"].get<double>() == doctest::Approx(0.265165));
    CHECK(r["bracket"]["upper"].get<double>() == r["a"].get<double>());
    CHECK_FALSE(r.contains("points"));
    const Json full = to_json(convergence_report(triangle_table(11), constants(3, 1, 4, 2)));
    CHECK(full["points"].size() == 5);
    CHECK(full["ratios"].size() == 3);

    const Json v = to_json(validate(fixtures::k33()));
    CHECK(v["is_bipartite"] == true);
    CHECK(v["acceptable"] == true);
    CHECK(v.contains("bipartition"));
    CHECK_FALSE(v.contains("odd_cycle"));
    const Json bad = to_json(validate(parse_edge_list("0 1\n0 2\n0 3\n1 2\n")));
    CHECK(bad["acceptable"] == false);
    CHECK(bad.contains("reason"));

    const RegularGraph g = fixtures::k4();
    const ClassDescriptor k = enumerate_classes(g, 3).front();
    const Json c = to_json(g, k);
    CHECK(c["mu"] == 3);
    CHECK(c["walk"].size() == 4);
    CHECK(c["walk"].front() == c["walk"].back());

    CHECK(to_json(Complex(1.5, -2.0)).dump() == "[1.5,-2.0]");
}
