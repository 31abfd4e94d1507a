#include "permsum.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "error.hpp"

namespace selberg {

std::vector<std::vector<int>> all_permutations(int n) {
  check_usage(n >= 1, "permutations need n >= 1");
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    for (size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Arrangement make_arrangement(std::vector<std::vector<int>> perms) {
  check_usage(!perms.empty(), "arrangement needs at least one permutation");
  size_t n = perms[0].size();
  Arrangement arr;
  arr.column_sums.assign(n, 0);
  for (const auto& perm : perms) {
    check_usage(perm.size() == n, "arrangement mixes permutation sizes");
    arr.sign *= permutation_sign(perm);
    for (size_t i = 0; i < n; ++i) arr.column_sums[i] += perm[i];
  }
  arr.perms = std::move(perms);
  return arr;
}

std::vector<Arrangement> all_arrangements(int n, int d) {
  check_usage(d >= 1, "arrangements need d >= 1");
  std::vector<std::vector<int>> perms = all_permutations(n);
  std::vector<Arrangement> out;
  std::vector<size_t> pick(static_cast<size_t>(d), 0);
  while (true) {
    std::vector<std::vector<int>> chosen;
    chosen.reserve(pick.size());
    for (size_t k : pick) chosen.push_back(perms[k]);
    out.push_back(make_arrangement(std::move(chosen)));
    // Odometer over the d slots.
    size_t slot = pick.size();
    while (slot > 0) {
      --slot;
      if (++pick[slot] < perms.size()) break;
      pick[slot] = 0;
      if (slot == 0) return out;
    }
  }
}

GammaVector gamma_vector(const Arrangement& arr) {
  int d = static_cast<int>(arr.perms.size());
  GammaVector gv;
  gv.gamma = arr.column_sums;
  std::sort(gv.gamma.begin(), gv.gamma.end());
  gv.mu.reserve(gv.gamma.size());
  for (size_t i = 0; i < gv.gamma.size(); ++i) {
    HalfInt mu = HalfInt::from_twice(2 * gv.gamma[i] - d * static_cast<int>(i + 2));
    check_internal(mu.twice_value >= 0,
                   "sorted column sum below its lower bound d(i+2)/2");
    gv.mu.push_back(mu);
  }
  return gv;
}

namespace {

struct Enumerator {
  const std::vector<std::vector<int>>& perms;
  const std::vector<int>& signs;
  int free_slots;
  SortedSumCounts counts;
  std::vector<int> sums;

  void walk(int slot, int sign) {
    if (slot == free_slots) {
      std::vector<int> sorted = sums;
      std::sort(sorted.begin(), sorted.end());
      counts[sorted] += sign;
      return;
    }
    for (size_t k = 0; k < perms.size(); ++k) {
      for (size_t i = 0; i < sums.size(); ++i) sums[i] += perms[k][i];
      walk(slot + 1, sign * signs[k]);
      for (size_t i = 0; i < sums.size(); ++i) sums[i] -= perms[k][i];
    }
  }
};

double power(double base, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

SortedSumCounts coalesced_column_sums(int n, int d, bool fix_first, int threads) {
  check_usage(n >= 1 && d >= 1, "column-sum enumeration needs n >= 1, d >= 1");
  std::vector<std::vector<int>> perms = all_permutations(n);
  std::vector<int> signs(perms.size());
  for (size_t k = 0; k < perms.size(); ++k) signs[k] = permutation_sign(perms[k]);

  int free_slots = d - (fix_first ? 1 : 0);
  std::vector<int> base(static_cast<size_t>(n), 0);
  if (fix_first) {
    for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i + 1;
  }
  if (free_slots == 0) {
    SortedSumCounts counts;
    std::sort(base.begin(), base.end());
    counts[base] = 1;
    return counts;
  }

  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 1 : std::min(hw, 8u));
  }
  auto prune_zeros = [](SortedSumCounts& counts) {
    for (auto it = counts.begin(); it != counts.end();) {
      it = it->second == 0 ? counts.erase(it) : std::next(it);
    }
  };

  double leaves = power(static_cast<double>(perms.size()), free_slots);
  if (threads <= 1 || leaves < 2000 || perms.size() < 2) {
    Enumerator e{perms, signs, free_slots, {}, base};
    e.walk(0, 1);
    prune_zeros(e.counts);
    return std::move(e.counts);
  }

  // Split the first free slot's choices across workers; each worker owns a
  // private map that is merged afterwards (exact integers, order irrelevant).
  size_t workers = std::min(static_cast<size_t>(threads), perms.size());
  std::vector<SortedSumCounts> partial(workers);
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      Enumerator e{perms, signs, free_slots, {}, base};
      for (size_t k = w; k < perms.size(); k += workers) {
        for (size_t i = 0; i < e.sums.size(); ++i) e.sums[i] += perms[k][i];
        e.walk(1, signs[k]);
        for (size_t i = 0; i < e.sums.size(); ++i) e.sums[i] -= perms[k][i];
      }
      partial[w] = std::move(e.counts);
    });
  }
  for (auto& t : pool) t.join();
  SortedSumCounts counts = std::move(partial[0]);
  for (size_t w = 1; w < workers; ++w) {
    for (const auto& [key, value] : partial[w]) {
      counts[key] += value;
    }
  }
  prune_zeros(counts);
  return counts;
}

Rational eval_by_permutation_sum(int n, int d, int p, int threads) {
  check_usage(n >= 1 && d >= 1 && p >= 0,
              "permutation sum requires n >= 1, d >= 1, p >= 0");
  check_usage(d % 2 == 0, "permutation-sum evaluation requires even d");
  SortedSumCounts counts = coalesced_column_sums(n, d, /*fix_first=*/true, threads);
  Rational total = 0;
  for (const auto& [gamma, count] : counts) {
    if (count == 0) continue;
    Integer product = 1;
    for (int g : gamma) {
      long arg = p + 2L * g - 2L * d + 1;  // integer and >= 1 by the bound
      check_internal(arg >= 1, "gamma factor argument fell below 1");
      product *= factorial_int(static_cast<unsigned long>(arg - 1));
    }
    total += Rational(count) * Rational(product);
  }
  long a = static_cast<long>(n) * (p + static_cast<long>(d) * (n - 1) + 1);
  Rational result = total / Rational(factorial_int(static_cast<unsigned long>(a)));
  result.canonicalize();
  return result;
}

namespace {

UniPoly phi_from_counts(int n, int d, const SortedSumCounts& counts, long base_shift_of_i(int, int)) {
  UniPoly total;
  for (const auto& [gamma, count] : counts) {
    if (count == 0) continue;
    UniPoly term = UniPoly::constant(Rational(count));
    for (size_t i = 0; i < gamma.size(); ++i) {
      long two_mu = 2L * gamma[i] - static_cast<long>(d) * static_cast<long>(i + 2);
      check_internal(two_mu >= 0, "sorted column sum below its lower bound d(i+2)/2");
      UniPoly base = UniPoly::variable() +
                     UniPoly::constant(Rational(base_shift_of_i(static_cast<int>(i), d)));
      term = term * pochhammer(base, two_mu);
    }
    total = total + term;
  }
  return total.scaled(Rational(factorial_int(static_cast<unsigned long>(n))));
}

}  // namespace

UniPoly phi_by_arrangement_sum(int n, int d, int threads) {
  check_usage(n >= 1 && d >= 1, "phi requires n >= 1, d >= 1");
  check_usage(d % 2 == 0, "arrangement-sum phi requires even d");
  SortedSumCounts counts = coalesced_column_sums(n, d, /*fix_first=*/true, threads);
  return phi_from_counts(n, d, counts,
                         [](int i, int dd) { return 1L + static_cast<long>(dd) * i; });
}

UniPoly phi_printed_index(int n, int d) {
  check_usage(n >= 1 && d >= 1 && d % 2 == 0, "phi requires n >= 1 and even d");
  SortedSumCounts counts = coalesced_column_sums(n, d, /*fix_first=*/true, 0);
  return phi_from_counts(n, d, counts,
                         [](int i, int dd) { return 1L + static_cast<long>(dd) * (i + 2); });
}

namespace {

// Determinant by Laplace expansion along the first remaining row, memoized on
// the set of available columns.
UniPoly det_recursive(const std::vector<std::vector<UniPoly>>& m, unsigned cols,
                      std::vector<UniPoly>& memo, std::vector<bool>& known) {
  if (cols == 0) return UniPoly::one();
  if (known[cols]) return memo[cols];
  size_t n = m.size();
  size_t row = n - static_cast<size_t>(__builtin_popcount(cols));
  UniPoly det;
  int parity = 1;
  for (size_t j = 0; j < n; ++j) {
    unsigned bit = 1u << j;
    if (!(cols & bit)) continue;
    UniPoly minor = det_recursive(m, cols & ~bit, memo, known);
    UniPoly contribution = m[row][j] * minor;
    det = parity > 0 ? det + contribution : det - contribution;
    parity = -parity;
  }
  known[cols] = true;
  memo[cols] = det;
  return det;
}

}  // namespace

UniPoly phi_by_determinant(int n) {
  check_usage(n >= 1, "phi requires n >= 1");
  size_t size = static_cast<size_t>(n);
  std::vector<std::vector<UniPoly>> m(size, std::vector<UniPoly>(size));
  for (size_t i = 0; i < size; ++i) {
    UniPoly base = UniPoly::variable() + UniPoly::constant(Rational(2 * (i + 1) - 1));
    for (size_t j = 0; j < size; ++j) {
      m[i][j] = pochhammer(base, 2 * static_cast<long>(j));
    }
  }
  std::vector<UniPoly> memo(1u << size);
  std::vector<bool> known(1u << size, false);
  unsigned all = (1u << size) - 1;
  UniPoly det = det_recursive(m, all, memo, known);
  return det.scaled(Rational(factorial_int(static_cast<unsigned long>(n))));
}

Rational eval_perm_printed_normalization(int n, int d, int p) {
  check_usage(n >= 1 && d >= 1 && d % 2 == 0 && p >= 0, "requires n >= 1, even d, p >= 0");
  SortedSumCounts counts = coalesced_column_sums(n, d, /*fix_first=*/true, 0);
  Rational total = 0;
  for (const auto& [gamma, count] : counts) {
    if (count == 0) continue;
    Integer product = 1;
    for (int g : gamma) {
      long arg = p + 2L * g - 2L * d + 1;
      check_internal(arg >= 1, "gamma factor argument fell below 1");
      product *= factorial_int(static_cast<unsigned long>(arg - 1));
    }
    total += Rational(count) * Rational(product);
  }
  long a = static_cast<long>(n) * (p + 1) + static_cast<long>(d) * n * (n - 1) / 2;
  Rational result = total / Rational(factorial_int(static_cast<unsigned long>(a)));
  result.canonicalize();
  return result;
}

}  // namespace selberg
