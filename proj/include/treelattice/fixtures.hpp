#ifndef TREELATTICE_FIXTURES_HPP
#define TREELATTICE_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "treelattice/graph.hpp"

// Built-in graphs used by `verify` and the tests.
namespace treelattice::fixtures {

std::string_view k4_text();
std::string_view k5_text();
std::string_view petersen_text();
std::string_view k33_text();

RegularGraph k4();
RegularGraph k5();
RegularGraph petersen();
RegularGraph k33();

/// Graph text for "k4", "k5", "petersen", "k33"; nullopt otherwise.
std::optional<std::string_view> by_name(std::string_view name);

}  // namespace treelattice::fixtures

#endif  // TREELATTICE_FIXTURES_HPP
