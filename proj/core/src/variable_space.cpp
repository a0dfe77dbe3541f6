#include "kz/variable_space.hpp"

#include <stdexcept>

namespace kz {

VariableSpace::VariableSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  rebuild_index();
}

void VariableSpace::rebuild_index() {
  index_.clear();
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    auto [it, fresh] = index_.emplace(labels_[static_cast<size_t>(i)], i);
    if (!fresh) throw std::invalid_argument("VariableSpace: duplicate label " + labels_[static_cast<size_t>(i)]);
  }
}

VariableSpace VariableSpace::xn(int n) {
  if (n < 0) throw std::invalid_argument("VariableSpace::xn: negative count");
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return VariableSpace(std::move(labels));
}

VariableSpace VariableSpace::whisker(int n) {
  if (n < 1) throw std::invalid_argument("VariableSpace::whisker: need n >= 1");
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(2 * n));
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  VariableSpace space(std::move(labels));
  space.split_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) space.split_[static_cast<size_t>(i)] = {i, n + i};
  return space;
}

VariableSpace VariableSpace::polarized(const VariableSpace& source, const std::vector<int>& widths) {
  if (static_cast<int>(widths.size()) != source.count())
    throw std::invalid_argument("VariableSpace::polarized: one width per source variable required");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> split(widths.size());
  int pos = 0;
  for (int i = 0; i < source.count(); ++i) {
    int w = widths[static_cast<size_t>(i)];
    if (w < 1) w = 1;  // variables absent from every generator still get one copy
    for (int j = 1; j <= w; ++j) {
      labels.push_back(source.label(i) + "_" + std::to_string(j));
      split[static_cast<size_t>(i)].push_back(pos++);
    }
  }
  VariableSpace space(std::move(labels));
  space.split_ = std::move(split);
  return space;
}

int VariableSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace kz
