#include "lyndon2d/report.hpp"

namespace lyndon2d {

nlohmann::ordered_json classify_report(const ClassifiedMatrix& matrix, const NameRegistry& registry,
                               Algorithm algorithm, std::uint64_t elapsed_ns) {
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (const NameId id : matrix.key.names)
    names.push_back(registry.word(id));
  return {
      {"rows", matrix.rows},
      {"width", matrix.width},
      {"periods", matrix.summaries.periods},
      {"lwpos", matrix.summaries.lwpos},
      {"names", std::move(names)},
      {"offsets", matrix.key.offsets},
      {"z", to_decimal(matrix.z)},
      {"lcm", to_decimal(matrix.lcm)},
      {"algorithm", std::string(to_string(algorithm))},
      {"elapsed_ns", elapsed_ns},
  };
}

nlohmann::ordered_json occurrence_record(const Occurrence& occ) {
  return {{"pattern", occ.pattern}, {"row", occ.row}, {"col", occ.col}};
}

} // namespace lyndon2d
