// JSON import/export for groups, homs, configurations, automata, tables
// and catalogs, CSV and PGM writers, and the textual group-spec parser
// used by the CLI (Z6, Z2 x Z3, D4, S3, or inline Cayley JSON).

#pragma once

#include <string>

#include <json.hpp>

#include "gca/eca.hpp"
#include "gca/monoid.hpp"

namespace gca {

using Json = nlohmann::ordered_json;

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json hom_to_json(const GroupHom& phi);
Json config_to_json(const Config& x);
Json gca_to_json(const Gca& tau);
Gca gca_from_json(const Json& j, const FiniteGroup& domain, const FiniteGroup& codomain);

/// A FunctionTable is a JSON array of output configurations, one per
/// domain configuration in rank order.
Json table_to_json(const FunctionTable& t);
FunctionTable table_from_json(const Json& j, const FiniteGroup& domain,
                              const FiniteGroup& codomain, Alphabet a);

Json catalog_to_json(const MonoidCatalog& cat);
std::string catalog_to_csv(const std::string& kind, const MonoidCatalog& cat);

/// One configuration per row.
std::string configs_to_csv(const std::vector<Config>& configs);

std::string mirror_table_csv();

/// Binary P5, symbol 0 rendered white and the top symbol black.
std::string raster_to_pgm(const std::vector<std::vector<int>>& rows, int q);
Json raster_to_json(const std::vector<std::vector<int>>& rows);

/// Accepts Zn, Zm x Zn (any spacing around 'x'), Dn, Sn, or an inline
/// Cayley JSON object.
FiniteGroup parse_group_spec(const std::string& spec);

} // namespace gca
