#pragma once

#include <string>
#include <vector>

namespace gapkit {

/// Set-cover instance over ground set {0..ground_size-1}. Sets are stored
/// with sorted, de-duplicated elements. An instance whose sets do not cover
/// the ground set is representable but flagged infeasible.
struct SetCoverInstance {
  int ground_size = 0;
  std::vector<std::vector<int>> sets;

  bool feasible() const;
  void validate() const;  // element ranges only

  friend bool operator==(const SetCoverInstance&,
                         const SetCoverInstance&) = default;
};

/// JSON object {"ground_size": n, "sets": [[...], ...]}.
SetCoverInstance parse_setcover(const std::string& json_text);
std::string emit_setcover(const SetCoverInstance& inst);

}  // namespace gapkit
