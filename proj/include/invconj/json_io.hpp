#ifndef INVCONJ_JSON_IO_HPP_
#define INVCONJ_JSON_IO_HPP_

#include <json.hpp>
#include <string>

#include "invconj/cayley.hpp"
#include "invconj/conjugacy.hpp"
#include "invconj/mcalister.hpp"

namespace invconj {

using json = nlohmann::ordered_json;

// {"elements": [...], "table": [[row of element names]]}
json table_to_json(const CayleyTable& t);
CayleyTable table_from_json(const json& j);
CayleyTable load_table(const std::string& path);

// {"group": table, "poset": {"elements": [...], "leq": [[bool]]},
//  "ideal": [...], "action": {"g": {"A": "gA"}}}
json triple_to_json(const McAlisterTriple& t);
McAlisterTriple triple_from_json(const json& j);
McAlisterTriple load_triple(const std::string& path);

json validation_to_json(const ValidationReport& r, const CayleyTable& t);
json triple_validation_to_json(const TripleValidation& r);
json partition_to_json(const Partition& p, const CayleyTable& t);
json green_to_json(const GreenData& g, const CayleyTable& t);
json characterize_to_json(const CharacterizeReport& r);
json factorizable_to_json(const FactorizableReport& r);

}  // namespace invconj

#endif  // INVCONJ_JSON_IO_HPP_
