// Integer partitions: weakly decreasing positive parts; the empty partition
// is the unique partition of 0.  Comparison is lexicographic on the
// zero-padded part sequences, so ordered containers iterate partitions of a
// fixed weight from dominance-minimal to dominance-maximal.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "error.hpp"

namespace selberg {

class Partition {
 public:
  Partition() = default;
  // Accepts any weakly decreasing sequence; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int i) const {  // zero-based, zero-padded
    return i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }
  std::vector<int> padded(int n) const;  // pre: n >= length()

  std::strong_ordering operator<=>(const Partition& o) const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  // "2,1" with "0" for the empty partition (cache-file form)...
  std::string to_string() const;
  // ...and "[2,1]" / "[]" for display.
  std::string to_bracket_string() const;
  std::string to_latex() const;  // "(2,1)" / "\varnothing"

  // Strict parse of the comma form; "0" and "" mean empty.
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
};

// True iff mu is dominated by lambda: equal weights and every prefix sum of
// mu is <= the corresponding prefix sum of lambda.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// All partitions of weight w with at most max_length parts, in decreasing
// lexicographic order ([w] first).
std::vector<Partition> partitions_of(int w, int max_length);

// All mu dominated by lambda with at most max_length parts, in decreasing
// lexicographic order (lambda itself first when it fits).
std::vector<Partition> partitions_dominated_by(const Partition& lambda, int max_length);

// (n-1, n-2, ..., 1, 0) as a partition; staircase(1) is empty.
Partition staircase(int n);

}  // namespace selberg
