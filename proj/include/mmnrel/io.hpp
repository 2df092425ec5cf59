#pragma once

#include "netcore.hpp"
#include "poset.hpp"
#include "relpoly.hpp"

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mmnrel::io
{

using json = nlohmann::json;

/// {"w": int, "l": int, "matchsticks": [[0|1,...],...] | null}
json to_json( Mmn const& net );
Mmn mmn_from_json( json const& j );

/// {"n": int, "coeffs": ["<decimal>", ...]}
json to_json( ReliabilityPolynomial const& f );
ReliabilityPolynomial polynomial_from_json( json const& j );

/// {"n": int, "counts": ["<decimal>", ...]}
json to_json( NForm const& x );
NForm nform_from_json( json const& j );

json to_json( RationalInterval const& iv );
json to_json( ComparisonResult const& r );
json to_json( Report const& r );
json to_json( SquareMiddleStats const& s );
json to_json( Poset const& p );

/// Exact decimal of q, truncated toward zero to `digits` fractional digits,
/// trailing zeros removed.
std::string truncated_decimal( mpq_class const& q, std::size_t digits );

/// "start:stop:step" with decimal or a/b fields; stop is included when hit exactly.
std::vector<mpq_class> parse_grid( std::string_view spec );

/// Header "p,<label>..." then one row per grid point.
std::string curve_csv( std::vector<std::string> const& labels, std::vector<Polynomial> const& curves,
                       std::vector<mpq_class> const& grid, std::size_t digits = 12 );

/// Hasse diagram; SH posets get one rank=same group per level.
std::string hasse_dot( Poset const& p );

std::string rank_profile_csv( std::size_t m, std::vector<std::uint64_t> const& profile );
std::string table_csv( std::vector<SquareMiddleStats> const& rows );

} // namespace mmnrel::io
