#include "partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace selberg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    check_usage(parts_[i] > 0 && (i == 0 || parts_[i - 1] >= parts_[i]),
                "partition parts must be weakly decreasing and nonnegative");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
  check_internal(n >= length(), "padding shorter than partition length");
  std::vector<int> v(parts_);
  v.resize(static_cast<size_t>(n), 0);
  return v;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  int m = std::max(length(), o.length());
  for (int i = 0; i < m; ++i) {
    if (part(i) != o.part(i)) return part(i) <=> o.part(i);
  }
  return std::strong_ordering::equal;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::to_bracket_string() const {
  if (parts_.empty()) return "[]";
  return "[" + to_string() + "]";
}

std::string Partition::to_latex() const {
  if (parts_.empty()) return "\\varnothing";
  return "(" + to_string() + ")";
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "0") return Partition();
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    check_usage(!piece.empty(), "malformed partition '" + text + "'");
    for (char c : piece) {
      check_usage(std::isdigit(static_cast<unsigned char>(c)),
                  "malformed partition '" + text + "'");
    }
    parts.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) return false;
  int m = std::max(mu.length(), lambda.length());
  int mu_sum = 0, lambda_sum = 0;
  for (int i = 0; i < m; ++i) {
    mu_sum += mu.part(i);
    lambda_sum += lambda.part(i);
    if (mu_sum > lambda_sum) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, int slots, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  int low = (remaining + slots - 1) / slots;  // smallest feasible first part
  for (int k = std::min(remaining, max_part); k >= low; --k) {
    prefix.push_back(k);
    generate(remaining - k, k, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int w, int max_length) {
  check_usage(w >= 0 && max_length >= 0, "partitions_of with negative arguments");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(w, w, max_length, prefix, out);
  if (w == 0) {
    out.clear();
    out.emplace_back();
  }
  return out;  // descending lex by construction
}

std::vector<Partition> partitions_dominated_by(const Partition& lambda, int max_length) {
  std::vector<Partition> out;
  for (const Partition& mu : partitions_of(lambda.weight(), max_length)) {
    if (dominance_leq(mu, lambda)) out.push_back(mu);
  }
  return out;
}

Partition staircase(int n) {
  check_usage(n >= 1, "staircase needs n >= 1");
  std::vector<int> parts;
  for (int k = n - 1; k >= 1; --k) parts.push_back(k);
  return Partition(std::move(parts));
}

}  // namespace selberg
