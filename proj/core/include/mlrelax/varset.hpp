#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace mlrelax {

/// A non-empty subset of the ground set, stored as a strictly increasing list
/// of 1-based variable indices. Equality of values is equality of sets.
class VarSet {
 public:
  VarSet(std::initializer_list<int> members);
  explicit VarSet(std::vector<int> members);

  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  int front() const { return members_.front(); }
  int back() const { return members_.back(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(int v) const;
  bool intersects(const VarSet& other) const;
  bool is_subset_of(const VarSet& other) const;
  bool is_strict_subset_of(const VarSet& other) const;

  // Renders as "{1,2,3}".
  std::string to_string() const;

  friend auto operator<=>(const VarSet&, const VarSet&) = default;
  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<int> members_;
};

// Raw set algebra on sorted vectors; results may be empty.
std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);

/// Identity of a relaxation variable: x_v for a singleton {v}, z_I for a set
/// with at least two members. Keyed by the set itself, so the same subset
/// names the same variable in every formulation.
class VarKey {
 public:
  static VarKey singleton(int v);
  // Throws EdgeTooSmall for sets with fewer than two members.
  static VarKey edge(VarSet members);
  static VarKey of(VarSet members);

  bool is_singleton() const noexcept { return set_.size() == 1; }
  bool is_edge() const noexcept { return set_.size() >= 2; }
  const VarSet& set() const noexcept { return set_; }
  int var() const { return set_.front(); }

  std::string to_string() const { return set_.to_string(); }

  friend auto operator<=>(const VarKey&, const VarKey&) = default;
  friend bool operator==(const VarKey&, const VarKey&) = default;

 private:
  explicit VarKey(VarSet s) : set_(std::move(s)) {}
  VarSet set_;
};

}  // namespace mlrelax

template <>
struct std::hash<mlrelax::VarSet> {
  std::size_t operator()(const mlrelax::VarSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : s) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};
