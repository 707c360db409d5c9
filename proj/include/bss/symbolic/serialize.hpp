#pragma once

#include "bss/symbolic/certificate.hpp"
#include "bss/symbolic/paths.hpp"
#include "bss/symbolic/shadow.hpp"

#include <json.hpp>
#include <string>

namespace bss {

// JSON forms follow the schemas in docs/schemas; text forms are for people.

nlohmann::json to_json(const RationalFunction &f);
nlohmann::json shadow_to_json(const SymbolicTrace &t, const FieldBoundaryReport &fb);
nlohmann::json tree_to_json(const PathTree &tree);
nlohmann::json certificate_to_json(const EpsilonCertificate &cert);
nlohmann::json neighborhood_to_json(const NeighborhoodReport &r);

std::string format_shadow(const Program &p, const SymbolicTrace &t);
std::string format_condition(const PathCondition &c);
std::string format_tree(const PathTree &tree);
std::string format_certificate(const EpsilonCertificate &cert);

} // namespace bss
