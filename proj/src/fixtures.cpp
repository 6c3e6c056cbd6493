#include "treelattice/fixtures.hpp"

namespace treelattice::fixtures {

std::string_view k4_text() {
    return "# complete graph K4 (q = 2)\n"
           "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
}

std::string_view k5_text() {
    return "# complete graph K5 (q = 3)\n"
           "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
}

std::string_view petersen_text() {
    return "# Petersen graph (q = 2): outer 5-cycle, spokes, inner pentagram\n"
           "0 1\n1 2\n2 3\n3 4\n0 4\n"
           "0 5\n1 6\n2 7\n3 8\n4 9\n"
           "5 7\n7 9\n6 9\n6 8\n5 8\n";
}

std::string_view k33_text() {
    return "# complete bipartite graph K_{3,3} (q = 2), sides {0,1,2} and {3,4,5}\n"
           "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
}

RegularGraph k4() { return parse_graph(k4_text()); }
RegularGraph k5() { return parse_graph(k5_text()); }
RegularGraph petersen() { return parse_graph(petersen_text()); }
RegularGraph k33() { return parse_graph(k33_text()); }

std::optional<std::string_view> by_name(std::string_view name) {
    if (name == "k4") return k4_text();
    if (name == "k5") return k5_text();
    if (name == "petersen") return petersen_text();
    if (name == "k33") return k33_text();
    return std::nullopt;
}

}  // namespace treelattice::fixtures
