#pragma once

#include <json.hpp>

#include "kgrass/filling_poset.hpp"
#include "kgrass/grothendieck.hpp"
#include "kgrass/involutions.hpp"
#include "kgrass/partition.hpp"
#include "kgrass/richardson.hpp"
#include "kgrass/svt.hpp"

namespace kgrass {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const AmbientBox& b);
json to_json(const SetValuedFilling& t);

/// {"terms":[{"nu":[…],"coeff":…},…]} sorted by |ν| then lex.
json to_json(const GBasisExpansion& e);
json coeffs_to_json(const std::map<Partition, long long>& coeffs);

/// {"vertices":[{"content":[…],"count":n,"mobius":m}],"covers":[[i,j],…]}
json to_json(const ContentPoset& p, const MobiusAssignment* m = nullptr);

/// {"fixed":[tableau],"pairs":[[tableau,tableau],…]}
json to_json(const Matching& m);

/// {"steps":[{"kind":…,"index":…,"after":{…}},…]}
json to_json(const DemolitionTranscript& t);

Partition parse_partition(const std::string& s); // "2,2" or "-" for ()
AmbientBox parse_box(const std::string& s);      // "4x3"

} // namespace kgrass
