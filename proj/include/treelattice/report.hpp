#ifndef TREELATTICE_REPORT_HPP
#define TREELATTICE_REPORT_HPP

#include <string>

#include <json.hpp>

#include "treelattice/asymptotics.hpp"
#include "treelattice/counter.hpp"
#include "treelattice/graph.hpp"
#include "treelattice/spectral.hpp"
#include "treelattice/words.hpp"

namespace treelattice {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// "n,count,normalized" with normalized printed to 12 significant digits.
std::string table_csv(const CountTable& t);

Json to_json(const CountTable& t);
Json to_json(const AsymptoticReport& r);
Json to_json(const ValidationReport& r);
Json to_json(const RegularGraph& g, const ClassDescriptor& k);
Json to_json(Complex z);

/// Object carrying schema_version followed by the given payload fields.
Json versioned(const std::string& kind, Json payload);

std::string format_g12(double x);

}  // namespace treelattice

#endif  // TREELATTICE_REPORT_HPP
