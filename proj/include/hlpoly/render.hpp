#pragma once

#include <json.hpp>
#include <string>

#include "hlpoly/audit.hpp"
#include "hlpoly/exact.hpp"
#include "hlpoly/stirling.hpp"

namespace hlpoly {

/// {"num": "...", "den": "..."} with decimal strings.
nlohmann::json to_json(const Rational& r);
/// Inverse of to_json; throws ParseError on malformed input.
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ResidueModP& r);
nlohmann::json to_json(const AuditValue& v);
nlohmann::json to_json(const GridPoint& g);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const StirlingTable& table);

std::string render_value(const AuditValue& v);

/// "k=1 alpha=1 a=1 n=2"
std::string point_label(const GridPoint& g);

/// Aligned human-readable table with a summary line.
std::string render_text(const AuditReport& report);

/// Pretty-printed JSON terminated by a newline.
std::string dump(const nlohmann::json& j);

}  // namespace hlpoly
