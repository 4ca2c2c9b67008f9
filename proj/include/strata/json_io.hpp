#pragma once

#include "json.hpp"

#include "strata/bipartition.hpp"
#include "strata/classifier.hpp"
#include "strata/exceptional.hpp"
#include "strata/hat_sequence.hpp"
#include "strata/splitting.hpp"
#include "strata/springer.hpp"

namespace strata::json {

using nlohmann::json;

// Bipartitions and partitions: arrays of non-negative integers, trailing zeros trimmed.
json to_json(const Bipartition& lambda);
Bipartition bipartition_from_json(const json& j);
json to_json(const Partition& nu);
Partition partition_from_json(const json& j);

// {"m", "e", "e_prime", "entries"}; primed sequences add "primed": true.
json to_json(const HatSequence& hat);
HatSequence hat_sequence_from_json(const json& j);

// {"kind", "partition"}
json to_json(const JordanPartition& jp);
JordanPartition jordan_partition_from_json(const json& j);

// {"family", "N", "blocks": [{"eig", "tag"?, "partition"}]}; optional "p".
json to_json(const ElementData& g);
ElementData element_data_from_json(const json& j);

json to_json(const IrrLabel& label);
json to_json(const StratumLabel& label);
json to_json(const SurjectivityReport& report);

} // namespace strata::json
