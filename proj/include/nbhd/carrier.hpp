#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbhd {

/// Subsets of a carrier are bitmasks over point indices.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 16;

constexpr Mask point_bit(int i) { return Mask{1} << i; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr bool proper_subset_of(Mask a, Mask b) { return a != b && subset_of(a, b); }
inline int set_size(Mask m) { return std::popcount(m); }

/// A finite ordered set of distinct point labels. Immutable and cheap to
/// copy; equality compares label sequences.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels)
      : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {
    if (labels_->empty()) throw std::domain_error("carrier must be nonempty");
    if (labels_->size() > static_cast<std::size_t>(kMaxPoints))
      throw std::length_error("carrier exceeds " + std::to_string(kMaxPoints) + " points");
    for (std::size_t i = 0; i < labels_->size(); ++i)
      for (std::size_t j = i + 1; j < labels_->size(); ++j)
        if ((*labels_)[i] == (*labels_)[j])
          throw std::domain_error("duplicate carrier label: " + (*labels_)[i]);
  }

  int size() const { return static_cast<int>(labels_->size()); }
  const std::string& label(int i) const { return labels_->at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return *labels_; }

  bool has_label(const std::string& s) const {
    return std::find(labels_->begin(), labels_->end(), s) != labels_->end();
  }

  int index_of(const std::string& s) const {
    auto it = std::find(labels_->begin(), labels_->end(), s);
    if (it == labels_->end()) throw std::domain_error("label not in carrier: " + s);
    return static_cast<int>(it - labels_->begin());
  }

  bool valid_point(int i) const { return 0 <= i && i < size(); }

  Mask full_mask() const { return (Mask{1} << size()) - 1; }
  bool valid_subset(Mask m) const { return subset_of(m, full_mask()); }

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

inline Mask mask_of(const Carrier& c, std::initializer_list<const char*> labels) {
  Mask m = 0;
  for (const char* s : labels) m |= point_bit(c.index_of(s));
  return m;
}

inline Mask mask_of(const Carrier& c, const std::vector<std::string>& labels) {
  Mask m = 0;
  for (const auto& s : labels) m |= point_bit(c.index_of(s));
  return m;
}

/// Labels of a subset, sorted lexicographically (the canonical text order).
inline std::vector<std::string> sorted_labels(const Carrier& c, Mask m) {
  std::vector<std::string> out;
  for (int i = 0; i < c.size(); ++i)
    if (m & point_bit(i)) out.push_back(c.label(i));
  std::sort(out.begin(), out.end());
  return out;
}

/// Compact text form of a subset: sorted labels in brackets, e.g. `[a,b]`.
inline std::string set_text(const Carrier& c, Mask m) {
  std::string out = "[";
  bool first = true;
  for (const auto& l : sorted_labels(c, m)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "]";
}

}  // namespace nbhd
