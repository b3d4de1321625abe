#include "mlrelax/varset.hpp"

#include <algorithm>
#include <iterator>

#include "mlrelax/error.hpp"

namespace mlrelax {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorCode::VarOutOfRange: return "VarOutOfRange";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::UnsupportedVariable: return "UnsupportedVariable";
    case ErrorCode::MissingCoordinate: return "MissingCoordinate";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::MalformedFlower: return "MalformedFlower";
    case ErrorCode::RedundantFlower: return "RedundantFlower";
    case ErrorCode::CenterTooLarge: return "CenterTooLarge";
    case ErrorCode::SuccessorUnionMismatch: return "SuccessorUnionMismatch";
    case ErrorCode::ArcNotStrictSubset: return "ArcNotStrictSubset";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::NotOfG: return "NotOfG";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::PathExists: return "PathExists";
    case ErrorCode::InvalidExtraLinearization: return "InvalidExtraLinearization";
    case ErrorCode::MonomialNotInHypergraph: return "MonomialNotInHypergraph";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

VarSet::VarSet(std::initializer_list<int> members) : VarSet(std::vector<int>(members)) {}

VarSet::VarSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw Error(ErrorCode::EmptyEdge, "a variable set must not be empty");
}

bool VarSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VarSet::intersects(const VarSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool VarSet::is_strict_subset_of(const VarSet& other) const {
  return size() < other.size() && is_subset_of(other);
}

std::string VarSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarKey VarKey::singleton(int v) { return VarKey(VarSet{v}); }

VarKey VarKey::edge(VarSet members) {
  if (members.size() < 2)
    throw Error(ErrorCode::EdgeTooSmall, "edge " + members.to_string() + " has fewer than 2 members");
  return VarKey(std::move(members));
}

VarKey VarKey::of(VarSet members) { return VarKey(std::move(members)); }

}  // namespace mlrelax
