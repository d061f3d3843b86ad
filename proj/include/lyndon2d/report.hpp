#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "lyndon2d/classify.hpp"
#include "lyndon2d/dictmatch.hpp"

namespace lyndon2d {

/// Structured classify output. Big integers are decimal strings.
nlohmann::ordered_json classify_report(const ClassifiedMatrix& matrix, const NameRegistry& registry,
                               Algorithm algorithm, std::uint64_t elapsed_ns);

nlohmann::ordered_json occurrence_record(const Occurrence& occ);

} // namespace lyndon2d
