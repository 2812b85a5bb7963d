#include "halfcomm/fusion_table.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "halfcomm/errors.hpp"

namespace halfcomm {

namespace {

template <class Label>
std::vector<std::pair<std::string, Label>> sorted_by_name(const std::vector<Label>& labels, const FusionData& data) {
  std::vector<std::pair<std::string, Label>> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.emplace_back(format_astar(l, data), l);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

} // namespace

std::vector<AStarLabel> fusion_table_labels(const FusionData& data, int cap, bool strict) {
  if (cap < 0) throw UsageError("grade cap must be nonnegative");
  std::vector<AStarLabel> labels;
  for (const auto& base : data.labels_up_to(cap)) {
    const int parity = ((data.grade(base) % 2) + 2) % 2;
    AStarLabel label{base, parity};
    if (strict && !is_simple_astar(label, data)) continue;
    labels.push_back(std::move(label));
  }
  std::vector<AStarLabel> out;
  for (auto& [name, l] : sorted_by_name(labels, data)) out.push_back(std::move(l));
  return out;
}

std::string fusion_table_json(const FusionData& data, int cap, bool strict) {
  using nlohmann::ordered_json;
  const auto labels = fusion_table_labels(data, cap, strict);
  ordered_json doc;
  doc["group"] = data.name();
  ordered_json label_rows = ordered_json::array();
  for (const auto& l : labels) {
    ordered_json row;
    row["label"] = format_astar(l, data);
    row["dim"] = astar_dim(l, data);
    row["grade"] = data.grade(l.base);
    label_rows.push_back(std::move(row));
  }
  doc["labels"] = std::move(label_rows);
  ordered_json products = ordered_json::array();
  for (const auto& x : labels)
    for (const auto& y : labels) {
      ordered_json row;
      row["x"] = format_astar(x, data);
      row["y"] = format_astar(y, data);
      std::vector<std::pair<std::string, long>> result;
      for (const auto& [c, m] : astar_tensor(x, y, data)) result.emplace_back(format_astar(c, data), m);
      std::sort(result.begin(), result.end());
      ordered_json terms = ordered_json::array();
      for (const auto& [name, m] : result) terms.push_back(ordered_json{{"label", name}, {"mult", m}});
      row["result"] = std::move(terms);
      products.push_back(std::move(row));
    }
  doc["products"] = std::move(products);
  return doc.dump(2) + "\n";
}

void export_fusion_table(const std::string& group, int cap, const std::string& path, bool strict) {
  const auto data = make_fusion_data(group);
  const std::string text = fusion_table_json(*data, cap, strict);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error("failed writing '" + path + "'");
}

} // namespace halfcomm
