#include <doctest.h>

#include <cmath>

#include "treelattice/asymptotics.hpp"
#include "treelattice/fixtures.hpp"

using namespace treelattice;

namespace {

ClassDescriptor first_class(const RegularGraph& g, int mu) {
    for (const ClassDescriptor& k : enumerate_classes(g, mu))
        if (k.mu == mu) return k;
    throw std::logic_error("no class");
}

CountTable triangle_table(int n_max) {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const ClassDescriptor k = first_class(g, 3);
    return count_class_axis(g, st, k, TreePath{st.path_from_base(g, k.start(g))}, n_max);
}

}  // namespace

TEST_CASE("K4 triangle constants") {
    const RegularGraph g = fixtures::k4();
    const AsymptoticReport r = constants(first_class(g, 3), g);
    CHECK(r.a == doctest::Approx(0.2651650429).epsilon(1e-9));
    CHECK(r.residue == doctest::Approx(0.1912760).epsilon(1e-6));
    CHECK(r.theorem_constant == doctest::Approx(0.75));
    CHECK(r.theorem_constant == doctest::Approx(r.a * std::pow(2.0, 1.5)));
    CHECK(r.bracket_upper == r.a);
    CHECK(r.bracket_lower == doctest::Approx(r.a / 2));
    CHECK(r.tau == doctest::Approx(2 * M_PI / std::log(2.0)));
    CHECK(r.residue > 0);
}

TEST_CASE("non-primitive class constants") {
    // Triangle squared on K4: mu = 6, nu = 2.
    const AsymptoticReport r = constants(6, 2, 4, 2);
    CHECK(r.a == doctest::Approx(3.0 / (4.0 * 8.0)));
    CHECK(r.theorem_constant == doctest::Approx(0.75));
    for (int q : {2, 3, 5}) {
        const AsymptoticReport s = constants(5, 1, 10, q);
        CHECK(s.bracket_lower < s.bracket_upper);
        CHECK(s.bracket_upper / s.bracket_lower == doctest::Approx(q));
        CHECK(s.residue > 0);
    }
    CHECK_THROWS_AS(constants(0, 1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(constants(3, 1, 4, 1), std::invalid_argument);
}

TEST_CASE("convergence diagnostics from an exact table") {
    const AsymptoticReport r = convergence_report(triangle_table(21), constants(3, 1, 4, 2));
    REQUIRE(r.points.size() == 10);
    CHECK(r.points.front().n == 3);
    CHECK(r.points.back().n == 21);
    CHECK(r.final_theorem_ratio == doctest::Approx(391.0 / 512.0 / 0.75));
    CHECK(r.final_deviation == doctest::Approx(r.final_theorem_ratio - 1.0));
    CHECK(r.points.back().scaled == doctest::Approx(391.0 * std::pow(2.0, -10.5)));
    REQUIRE(r.ratios.size() == 3);
    CHECK(r.ratios[0].n == 17);
    CHECK(r.ratios[0].ratio == doctest::Approx(95.0 / 51.0));
    CHECK(r.ratios[2].ratio == doctest::Approx(391.0 / 187.0));
    CHECK(r.ratios[2].relative_to_q == doctest::Approx(391.0 / 374.0 - 1.0));
    for (const AsymptoticPoint& p : r.points)
        CHECK(p.in_bracket == (p.scaled >= r.bracket_lower && p.scaled <= r.bracket_upper));

    // Deeper tables settle: every ratio from n = 23 to 41 is within 5% of q.
    const CountTable t = triangle_table(41);
    const AsymptoticReport deep = convergence_report(t, constants(3, 1, 4, 2));
    for (const AsymptoticPoint& p : deep.points) {
        if (p.n < 23) continue;
        CHECK(std::abs(static_cast<double>(t.count(p.n)) / static_cast<double>(t.count(p.n - 2)) / 2 - 1) < 0.05);
    }
    CHECK(std::abs(deep.final_deviation) < 0.02);
}

TEST_CASE("table too short") {
    CHECK_THROWS_WITH_AS(convergence_report(triangle_table(6), constants(3, 1, 4, 2)), "table too short",
                         std::invalid_argument);
    CHECK_NOTHROW(convergence_report(triangle_table(7), constants(3, 1, 4, 2)));
}

TEST_CASE("bipartite bracket") {
    const RegularGraph g = fixtures::k33();
    const auto [lower, upper] = bipartite_bounds(first_class(g, 4), g);
    CHECK(lower == doctest::Approx(4.0 / 72.0));
    CHECK(upper == doctest::Approx(2.0 / 9.0));
    CHECK(upper / lower == doctest::Approx(4.0));
    const RegularGraph k4 = fixtures::k4();
    CHECK_THROWS_AS(bipartite_bounds(first_class(k4, 3), k4), std::invalid_argument);
}
