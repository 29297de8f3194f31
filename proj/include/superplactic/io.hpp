#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "superplactic/lr.hpp"
#include "superplactic/taquin.hpp"

namespace superplactic {

inline nlohmann::ordered_json cell_json(Cell c) { return nlohmann::ordered_json::array({c.row, c.col}); }

/// One JSON line per slide: {"corner":[i,j],"path":[[i,j],...],"vacated":[i,j]}.
inline std::string format_trace(const std::vector<SlideRecord>& slides) {
  std::string out;
  for (const auto& s : slides) {
    nlohmann::ordered_json line;
    line["corner"] = cell_json(s.corner);
    line["path"] = nlohmann::ordered_json::array();
    for (Cell c : s.path) line["path"].push_back(cell_json(c));
    line["vacated"] = cell_json(s.vacated);
    out += line.dump() + '\n';
  }
  return out;
}

/// `#` header lines with the skew shape and alphabet, then `<nu> <coefficient>`.
inline std::string format_lr_report(const LrReport& r) {
  std::string out = "# shape " + format_skew_shape(r.shape) + "\n# alphabet";
  for (const auto& e : r.alphabet->entries()) out += " " + e.symbol + ":" + (e.parity == Parity::odd ? "1" : "0");
  out += "\n# skew-tableaux " + std::to_string(r.skew_tableaux) + "\n";
  for (const auto& t : r.terms) out += format_partition(t.nu) + " " + std::to_string(t.coefficient) + "\n";
  return out;
}

inline std::string lr_report_json(const LrReport& r) {
  nlohmann::ordered_json j;
  j["shape"] = format_skew_shape(r.shape);
  j["alphabet"] = nlohmann::ordered_json::array();
  for (const auto& e : r.alphabet->entries()) {
    j["alphabet"].push_back({{"symbol", e.symbol}, {"parity", e.parity == Parity::odd ? 1 : 0}});
  }
  j["skew_tableaux"] = r.skew_tableaux;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : r.terms) {
    nlohmann::ordered_json term;
    term["nu"] = format_partition(t.nu);
    term["coefficient"] = t.coefficient;
    term["tableaux"] = t.tableaux;
    j["terms"].push_back(term);
  }
  return j.dump(2) + "\n";
}

}  // namespace superplactic
