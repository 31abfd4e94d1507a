// Acceptance gate: seven criteria, one PASS/FAIL line each, exit 1 on any
// failure.  Everything is computed live against the frozen golden values and
// the brute-force integrator.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "errata.hpp"
#include "error.hpp"
#include "gamma.hpp"
#include "jack.hpp"
#include "jackeval.hpp"
#include "multipoly.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "permsum.hpp"
#include "rational.hpp"
#include "recurse.hpp"
#include "sympoly.hpp"
#include "unipoly.hpp"
#include "workspace.hpp"

using namespace selberg;

namespace {

int failures = 0;

void report(int index, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", index, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(int index, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(index, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// All structured pipelines (plus the oracle where the guard allows) must
// reproduce `expected` for I(n, d, p).
bool check_I(Workspace& ws, int n, int d, int p, const Rational& expected,
             std::string& why) {
  struct Route {
    const char* name;
    Rational value;
  };
  std::vector<Route> routes;
  routes.push_back({"jack", eval_by_jack_expansion(n, d, p, ws)});
  routes.push_back({"rec", eval_by_recursion(n, d, p, ws)});
  if (d % 2 == 0) routes.push_back({"perm", eval_by_permutation_sum(n, d, p, ws.threads)});
  if (n <= ws.guard.max_n && d <= ws.guard.max_d && p <= ws.guard.max_p) {
    routes.push_back({"oracle", oracle_I(n, d, p, ws.guard, &ws.oracle_memo)});
  }
  for (const Route& r : routes) {
    if (r.value != expected) {
      why = "I(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(p) +
            ") via " + r.name + " = " + rational_to_string(r.value) + ", expected " +
            rational_to_string(expected);
      return false;
    }
  }
  return true;
}

bool check_J(Workspace& ws, int n, int kappa, const SymPoly& f, const Rational& expected,
             const std::string& label, std::string& why) {
  Rational rec = recursion_eval(n, kappa, f, ws);
  Rational orc = oracle_J(n, kappa, f, ws.guard, &ws.oracle_memo);
  if (rec != expected || orc != expected) {
    why = label + ": rec = " + rational_to_string(rec) +
          ", oracle = " + rational_to_string(orc) + ", expected " +
          rational_to_string(expected);
    return false;
  }
  return true;
}

void criterion1(Workspace& ws) {
  struct Fixture {
    std::string label;
    bool ok;
  };
  std::vector<Fixture> fixtures;
  double worst = 0;
  std::string why;
  bool all = true;

  auto timed = [&](const std::string& label, auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = fn();
    double secs = seconds_since(start);
    if (secs > worst) worst = secs;
    if (ok && secs >= 1.0) {
      ok = false;
      why = label + " took " + std::to_string(secs) + "s (budget 1s)";
    }
    if (!ok) all = false;
    return ok;
  };

  timed("I(2,1,0)", [&] { return check_I(ws, 2, 1, 0, make_rational(1, 16), why); });
  timed("I(2,1,1)", [&] { return check_I(ws, 2, 1, 1, make_rational(1, 192), why); });
  timed("I(2,2,0)", [&] { return check_I(ws, 2, 2, 0, make_rational(1, 36), why); });
  timed("J(2,1,1)", [&] {
    return check_J(ws, 2, 1, sym_constant(2, Rational(1)), make_rational(1, 12),
                   "J(2,1,1)", why);
  });
  timed("J(2,2,1)", [&] {
    return check_J(ws, 2, 2, sym_constant(2, Rational(1)), make_rational(1, 24),
                   "J(2,2,1)", why);
  });
  timed("J(2,2,m[1,1])", [&] {
    return check_J(ws, 2, 2, sym_monomial(Partition({1, 1}), 2), make_rational(1, 360),
                   "J(2,2,m[1,1])", why);
  });
  for (int d = 1; d <= 4 && all; ++d) {
    for (int p = 0; p <= 6 && all; ++p) {
      timed("I(1," + std::to_string(d) + "," + std::to_string(p) + ")",
            [&] { return check_I(ws, 1, d, p, make_rational(1, p + 1), why); });
    }
  }

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", worst);
  report(1, all,
         all ? "34 golden fixtures match on every applicable route, slowest " +
                   std::string(buf) + "s"
             : why);
}

void criterion2(Workspace& ws) {
  auto start = std::chrono::steady_clock::now();
  std::string why;
  bool all = true;
  int points = 0;

  for (int n = 1; n <= 3 && all; ++n) {
    for (int d = 1; d <= 3 && all; ++d) {
      for (int p = 0; p <= 3 && all; ++p) {
        Rational reference = oracle_I(n, d, p, ws.guard, &ws.oracle_memo);
        all = check_I(ws, n, d, p, reference, why);
        ++points;
      }
    }
  }
  // Even-d permutation route, including d = 4 beyond the oracle/jack grid.
  for (int n = 1; n <= 3 && all; ++n) {
    for (int d = 2; d <= 4 && all; d += 2) {
      for (int p = 0; p <= 4 && all; ++p) {
        Rational perm = eval_by_permutation_sum(n, d, p, ws.threads);
        Rational jack = eval_by_jack_expansion(n, d, p, ws);
        Rational orc = oracle_I(n, d, p, ws.guard, &ws.oracle_memo);
        if (perm != jack || perm != orc) {
          why = "perm grid disagrees at (" + std::to_string(n) + "," + std::to_string(d) +
                "," + std::to_string(p) + ")";
          all = false;
        }
        ++points;
      }
    }
  }

  double secs = seconds_since(start);
  if (all && secs > 600.0) {
    all = false;
    why = "grid exceeded the 10-minute budget";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", secs);
  report(2, all,
         all ? "every route agrees at all " + std::to_string(points) +
                   " grid points in " + buf + "s"
             : why);
}

void criterion3(Workspace& ws) {
  std::string why;
  bool all = true;

  for (int n = 1; n <= 4 && all; ++n) {
    if (phi_by_determinant(n) != phi_by_arrangement_sum(n, 2, ws.threads)) {
      why = "determinant and arrangement polynomials differ at n = " + std::to_string(n);
      all = false;
    }
  }
  UniPoly expected(std::vector<Rational>{Rational(20), Rational(8)});
  if (all && phi_by_arrangement_sum(2, 2) != expected) {
    why = "phi(2,2) != 8p + 20";
    all = false;
  }
  const std::vector<std::pair<int, int>> pairs = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 4}};
  for (const auto& [n, d] : pairs) {
    if (!all) break;
    long deg = ws.cached_closed_form(n, d).phi.degree();
    long bound = phi_degree_bound(n, d);
    if (deg != bound) {
      why = "degree " + std::to_string(deg) + " != bound " + std::to_string(bound) +
            " at (" + std::to_string(n) + "," + std::to_string(d) + ")";
      all = false;
    }
  }
  report(3, all,
         all ? "determinant matches arrangement sum for n <= 4, phi(2,2) = 8p + 20, "
               "residual degree attains its bound on all five pairs"
             : why);
}

void criterion4(Workspace&) {
  std::string why;
  bool all = true;
  long arrangements = 0, partitions = 0;

  for (int n = 1; n <= 4 && all; ++n) {
    for (int d = 1; d <= 3 && all; ++d) {
      for (const Arrangement& arr : all_arrangements(n, d)) {
        GammaVector gv = gamma_vector(arr);
        ++arrangements;
        for (int i = 0; i < n; ++i) {
          if (2 * gv.gamma[static_cast<size_t>(i)] < d * (i + 2)) {
            why = "column-sum bound fails at n=" + std::to_string(n) +
                  " d=" + std::to_string(d);
            all = false;
          }
        }
      }
    }
  }
  for (int n = 1; n <= 5 && all; ++n) {
    for (int d = 1; d <= 4 && all; ++d) {
      std::vector<int> parts;
      for (int i = n - 1; i >= 1; --i) parts.push_back(d * i);
      Partition top(parts);
      std::vector<int> minima = minimal_parts(n, d);
      for (const Partition& lam : partitions_dominated_by(top, n)) {
        ++partitions;
        std::vector<int> padded = lam.padded(n);
        for (int i = 0; i < n; ++i) {
          if (padded[static_cast<size_t>(i)] < minima[static_cast<size_t>(i)]) {
            why = "part minimum fails for " + lam.to_bracket_string() +
                  " at n=" + std::to_string(n) + " d=" + std::to_string(d);
            all = false;
          }
        }
      }
    }
  }
  report(4, all,
         all ? "column-sum bound holds for " + std::to_string(arrangements) +
                   " arrangements; part minima hold for " + std::to_string(partitions) +
                   " dominated partitions"
             : why);
}

void criterion5(Workspace& ws) {
  std::string why;
  bool all = true;
  int checked = 0;

  std::vector<Rational> alphas = {make_rational(1, 2), Rational(1), Rational(2),
                                  make_rational(2, 3)};
  for (const Rational& alpha : alphas) {
    for (int w = 1; w <= 5 && all; ++w) {
      std::vector<Partition> parts = partitions_of(w, w);
      std::vector<SymPoly> polys;
      for (const Partition& lam : parts) {
        polys.push_back(ws.jacktable.jack(lam, alpha, w, ws.symcache));
      }
      for (size_t i = 0; i < parts.size() && all; ++i) {
        if (polys[i].coefficient(parts[i]) != 1) {
          why = "leading coefficient != 1 for " + parts[i].to_bracket_string();
          all = false;
        }
        for (const auto& [mu, c] : polys[i].terms) {
          if (!dominance_leq(mu, parts[i])) {
            why = "support escapes dominance for " + parts[i].to_bracket_string();
            all = false;
          }
        }
        for (size_t j = i + 1; j < parts.size() && all; ++j) {
          if (alpha_inner_product(polys[i], polys[j], alpha, ws.symcache) != 0) {
            why = "nonzero inner product between " + parts[i].to_bracket_string() +
                  " and " + parts[j].to_bracket_string();
            all = false;
          }
          ++checked;
        }
        if (alpha == 1 && all && !(polys[i] == schur(parts[i], w))) {
          why = "alpha = 1 does not match schur at " + parts[i].to_bracket_string();
          all = false;
        }
      }
    }
  }

  for (int n = 2; n <= 5 && all; ++n) {
    MultiPoly product = MultiPoly::constant(n, Rational(1));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        product = product * (MultiPoly::variable(n, i) + MultiPoly::variable(n, j));
      }
    }
    if (!(sym_to_multipoly(schur(staircase(n), n)) == product)) {
      why = "staircase schur misses the pairwise product at n = " + std::to_string(n);
      all = false;
    }
  }
  report(5, all,
         all ? "Jack basis orthogonal and unitriangular through weight 5 (4 alphas, " +
                   std::to_string(checked) + " pairs), alpha = 1 matches schur, "
                   "staircase schur equals the pairwise-sum product for n <= 5"
             : why);
}

void criterion6(Workspace& ws) {
  std::string why;
  bool all = true;
  std::vector<ErrataEntry> entries = errata_entries(ws);
  if (entries.size() < 6) {
    why = "only " + std::to_string(entries.size()) + " errata entries";
    all = false;
  }
  for (const ErrataEntry& e : entries) {
    if (!all) break;
    if (e.printed_value == e.oracle_value) {
      why = "entry " + e.id + ": printed reading matches the oracle (not a discrepancy)";
      all = false;
    } else if (e.implemented_value != e.oracle_value) {
      why = "entry " + e.id + ": implemented value disagrees with the oracle";
      all = false;
    }
  }
  // Two hallmark fixtures pinned exactly.
  auto expect = [&](const std::string& id, const std::string& printed,
                    const std::string& implemented) {
    if (!all) return;
    for (const ErrataEntry& e : entries) {
      if (e.id != id) continue;
      if (e.printed_value != printed || e.implemented_value != implemented) {
        why = "entry " + id + " fixture values changed";
        all = false;
      }
      return;
    }
    why = "entry " + id + " missing";
    all = false;
  };
  expect("perm-normalization", "5/6", "1/36");
  expect("recursion-reduction", "1/6", "1/12");

  report(6, all,
         all ? std::to_string(entries.size()) +
                   " documented discrepancies: printed reading refuted and implemented "
                   "reading confirmed by direct integration on every fixture"
             : why);
}

void criterion7(Workspace& ws) {
  std::string why;
  bool all = true;
  for (int p = 0; p <= 4 && all; ++p) {
    Rational shifted = display_two_var(p + 1).rational_value();
    Rational value = eval_by_jack_expansion(2, 1, p, ws);
    if (shifted != value) {
      why = "shift mismatch at p = " + std::to_string(p) + ": display(p+1) = " +
            rational_to_string(shifted) + ", I(2,1,p) = " + rational_to_string(value);
      all = false;
    }
  }
  report(7, all,
         all ? "two-variable display at p + 1 reproduces I(2,1,p) for p <= 4" : why);
}

}  // namespace

int main() {
  Workspace ws;
  try {
    ws.ensure_jack_cache_loaded();
  } catch (const std::exception&) {
    // A corrupt cache must not block the gate; start from an empty table.
  }

  criterion(1, [&] { criterion1(ws); });
  criterion(2, [&] { criterion2(ws); });
  criterion(3, [&] { criterion3(ws); });
  criterion(4, [&] { criterion4(ws); });
  criterion(5, [&] { criterion5(ws); });
  criterion(6, [&] { criterion6(ws); });
  criterion(7, [&] { criterion7(ws); });

  ws.save_jack_cache_if_dirty();
  return failures == 0 ? 0 : 1;
}
