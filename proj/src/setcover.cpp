#include "gapkit/setcover.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gapkit/graph.hpp"  // ParseError

namespace gapkit {

bool SetCoverInstance::feasible() const {
  std::vector<char> covered(ground_size, 0);
  for (const auto& s : sets)
    for (int e : s) covered[e] = 1;
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

void SetCoverInstance::validate() const {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
  for (const auto& s : sets)
    for (int e : s)
      if (e < 0 || e >= ground_size)
        throw std::invalid_argument("set element out of range");
}

SetCoverInstance parse_setcover(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed set-cover json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ground_size") || !j.contains("sets"))
    throw ParseError("set-cover json must carry ground_size and sets");
  SetCoverInstance inst;
  try {
    inst.ground_size = j.at("ground_size").get<int>();
    inst.sets = j.at("sets").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed set-cover json: ") + e.what());
  }
  for (auto& s : inst.sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string emit_setcover(const SetCoverInstance& inst) {
  nlohmann::json j;
  j["ground_size"] = inst.ground_size;
  j["sets"] = inst.sets;
  return j.dump() + "\n";
}

}  // namespace gapkit
