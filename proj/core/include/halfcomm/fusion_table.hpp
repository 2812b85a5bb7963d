#pragma once

#include <string>

#include "halfcomm/fusion.hpp"

namespace halfcomm {

/// Labels of A_*(G) whose base has size measure <= cap (see FusionData::labels_up_to),
/// sorted by their printed form. With strict, only bases in Irr(G)_[parity] are kept.
std::vector<AStarLabel> fusion_table_labels(const FusionData& data, int cap, bool strict = false);

/// {group, labels:[{label, dim, grade}], products:[{x, y, result:[{label, mult}]}]}
/// over every ordered pair of labels. Deterministic: equal inputs give identical bytes.
std::string fusion_table_json(const FusionData& data, int cap, bool strict = false);

/// Writes fusion_table_json(make_fusion_data(group), ...) to path. Throws Error on I/O failure.
void export_fusion_table(const std::string& group, int cap, const std::string& path, bool strict = false);

} // namespace halfcomm
