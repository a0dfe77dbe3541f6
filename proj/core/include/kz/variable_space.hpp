#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kz {

/// An ordered list of polynomial-ring variables. Everything downstream
/// (monomials, Koszul basis letters, strand masks) refers to variables by
/// their 0-based position here; text formats are 1-based.
///
/// A polarized space additionally remembers how its variables partition over
/// the source variables: split_of(i) lists, in order, the positions of
/// x_{i,1}, x_{i,2}, ... The splitting order is the interleaved sequence
/// x_{1,1},...,x_{1,c_1},x_{2,1},...; for whisker spaces the convention is
/// x_i = x_{i,1} and y_i = x_{i,2}.
class VariableSpace {
public:
  VariableSpace() = default;
  explicit VariableSpace(std::vector<std::string> labels);

  /// x1,...,xn
  static VariableSpace xn(int n);
  /// x1,...,xn,y1,...,yn with the split map {x_i -> [x_i, y_i]}
  static VariableSpace whisker(int n);
  /// polarized space over `source`, splitting variable i into widths[i]
  /// copies labeled "<label>_j"
  static VariableSpace polarized(const VariableSpace& source, const std::vector<int>& widths);

  int count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// -1 when the label is unknown
  int index_of(const std::string& label) const;

  bool is_polarized() const { return !split_.empty(); }
  int source_count() const { return static_cast<int>(split_.size()); }
  const std::vector<int>& split_of(int source_var) const {
    return split_.at(static_cast<size_t>(source_var));
  }

  /// target position of x_{source_var, j} for 1-based slot j
  int split_slot(int source_var, int j) const {
    return split_.at(static_cast<size_t>(source_var)).at(static_cast<size_t>(j - 1));
  }

  /// spaces are identified by their labels; the split map is bookkeeping
  bool operator==(const VariableSpace& other) const { return labels_ == other.labels_; }
  bool operator!=(const VariableSpace& other) const { return !(*this == other); }

private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> split_;  // empty unless polarized

  void rebuild_index();
};

}  // namespace kz
