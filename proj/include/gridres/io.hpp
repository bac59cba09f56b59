// Serialization of Betti tables and reports: canonical JSON (round-trips
// byte-identically), Macaulay2-flavored text rendering, and CSV rows for
// sweep results. All output is deterministic given the inputs.
#ifndef GRIDRES_IO_HPP
#define GRIDRES_IO_HPP

#include <string>

#include "json.hpp"

#include "gridres/betti_table.hpp"
#include "gridres/scheme.hpp"

namespace gridres {

/// {"beta0": [[a,b,n], ...], "beta1": ..., "beta2": ...,
///  "normalization": {"transposed": bool}} with each layer sorted by (a,b)
/// ascending.
nlohmann::ordered_json table_to_json(const BettiTable& table,
                                     const NormalizationRecord& rec);

/// Inverse of table_to_json; throws ParamError on malformed input.
std::pair<BettiTable, NormalizationRecord> table_from_json(
    const nlohmann::ordered_json& j);

/// Three "Fk = R(-a,-b)^n ++ ..." lines (direct sums), shifts sorted by
/// (total degree, first coordinate) descending; an empty layer renders as
/// "0". A trailing normalization note is appended when transposed.
std::string table_to_text(const BettiTable& table,
                          const NormalizationRecord& rec);

/// Header and one row of the sweep CSV.
std::string csv_header();
std::string csv_row(const AciParams& params, bool pass, long long wall_ms);

}  // namespace gridres

#endif  // GRIDRES_IO_HPP
