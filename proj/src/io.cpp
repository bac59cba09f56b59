#include "gridres/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace gridres {

namespace {

nlohmann::ordered_json layer_to_json(const BettiTable::Layer& layer) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [deg, mult] : layer)
    arr.push_back({deg.a, deg.b, mult});
  return arr;
}

void layer_from_json(const nlohmann::ordered_json& arr, BettiTable& table,
                     int k) {
  if (!arr.is_array()) throw ParamError("betti layer must be an array");
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 3)
      throw ParamError("betti layer entry must be a triple [a, b, n]");
    for (const auto& x : entry)
      if (!x.is_number_integer())
        throw ParamError("betti layer entry must hold integers");
    int a = entry[0].get<int>();
    int b = entry[1].get<int>();
    int n = entry[2].get<int>();
    if (a < 0 || b < 0 || n <= 0)
      throw ParamError("betti layer entry out of range");
    table.add(k, {a, b}, n);
  }
}

}  // namespace

nlohmann::ordered_json table_to_json(const BettiTable& table,
                                     const NormalizationRecord& rec) {
  nlohmann::ordered_json j;
  j["beta0"] = layer_to_json(table.beta0);
  j["beta1"] = layer_to_json(table.beta1);
  j["beta2"] = layer_to_json(table.beta2);
  j["normalization"] = {{"transposed", rec.transposed}};
  return j;
}

std::pair<BettiTable, NormalizationRecord> table_from_json(
    const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ParamError("betti table JSON must be an object");
  BettiTable table;
  for (int k = 0; k < 3; ++k) {
    std::string key = "beta" + std::to_string(k);
    if (!j.contains(key)) throw ParamError("missing layer " + key);
    layer_from_json(j.at(key), table, k);
  }
  NormalizationRecord rec;
  if (!j.contains("normalization") || !j.at("normalization").is_object() ||
      !j.at("normalization").contains("transposed") ||
      !j.at("normalization").at("transposed").is_boolean())
    throw ParamError("missing or malformed normalization record");
  rec.transposed = j.at("normalization").at("transposed").get<bool>();
  return {table, rec};
}

std::string table_to_text(const BettiTable& table,
                          const NormalizationRecord& rec) {
  std::ostringstream out;
  for (int k = 0; k < 3; ++k) {
    const BettiTable::Layer& layer = table.layer(k);
    out << "F" << k << " = ";
    if (layer.empty()) {
      out << "0\n";
      continue;
    }
    std::vector<std::pair<BiDegree, int>> entries(layer.begin(), layer.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& l, const auto& r) {
                if (l.first.total() != r.first.total())
                  return l.first.total() > r.first.total();
                return l.first.a > r.first.a;
              });
    bool first = true;
    for (const auto& [deg, mult] : entries) {
      if (!first) out << " ++ ";
      first = false;
      out << "R(-" << deg.a << ",-" << deg.b << ")";
      if (mult > 1) out << "^" << mult;
    }
    out << "\n";
  }
  if (rec.transposed)
    out << "(factors swapped internally; shifts mapped back)\n";
  return out.str();
}

std::string csv_header() {
  return "alpha1,alpha2,beta1,beta2,m11,m12,m21,pass,wall_ms";
}

std::string csv_row(const AciParams& params, bool pass, long long wall_ms) {
  std::ostringstream out;
  out << params.alpha1 << ',' << params.alpha2 << ',' << params.beta1 << ','
      << params.beta2 << ',' << params.m11 << ',' << params.m12 << ','
      << params.m21 << ',' << (pass ? "pass" : "fail") << ',' << wall_ms;
  return out.str();
}

}  // namespace gridres
