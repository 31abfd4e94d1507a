// Jack polynomials in the monomial basis, built by Gram-Schmidt against the
// alpha-deformed power-sum inner product, processing the partitions of each
// weight from dominance-minimal to dominance-maximal so every projection
// target already exists.  Results are monic in m_lambda and supported on
// partitions dominated by lambda.
//
// The table is safe for concurrent readers with a single writer at a time and
// can be persisted to a plain-text cache file:
//
//   selberg-jack-cache v1
//   alpha=2/1 nvars=2 lambda=2 : 2=1/1;1,1=2/3
//
// Records are self-contained; any line that is not the header or a record is
// an error.
#pragma once

#include <map>
#include <shared_mutex>
#include <string>

#include "partition.hpp"
#include "rational.hpp"
#include "sympoly.hpp"

namespace selberg {

class JackTable {
 public:
  // Pre: alpha > 0, length(lambda) <= nvars, weight(lambda) <= nvars.
  // Returns a reference that stays valid for the table's lifetime.
  const SymPoly& jack(const Partition& lambda, const Rational& alpha, int nvars,
                      SymCache& symcache);

  // Merge records from a cache file; missing file is fine, malformed content
  // is a usage error.
  void load_file(const std::string& path);
  // Atomic rewrite (temp file + rename); returns false on I/O failure.
  bool save_file(const std::string& path);
  // Canonical serialization: header plus records sorted by (alpha, nvars,
  // lambda), each with its terms from dominance-largest down.
  std::string serialize() const;
  void merge_serialized(const std::string& text);

  bool dirty() const;
  size_t size() const;

 private:
  struct Key {
    Rational alpha;
    int nvars;
    Partition lambda;
    bool operator<(const Key& o) const {
      int c = cmp(alpha, o.alpha);
      if (c != 0) return c < 0;
      if (nvars != o.nvars) return nvars < o.nvars;
      return lambda < o.lambda;
    }
  };

  // Pre: exclusive lock held.
  void construct_weight(const Rational& alpha, int nvars, int weight, SymCache& symcache);

  std::map<Key, SymPoly> polys_;
  mutable std::shared_mutex mutex_;
  bool dirty_ = false;
};

// Jack polynomial restricted to n variables (dropping terms that need more),
// built in max(n, weight) variables so the inner product is defined.
SymPoly jack_restricted(const Partition& lambda, const Rational& alpha, int n,
                        JackTable& table, SymCache& symcache);

}  // namespace selberg
