// Jack polynomials: known expansions, orthogonality, the schur specialization,
// restriction, and the persistent cache format.
#include "doctest.h"

#include <filesystem>
#include <string>
#include <vector>

#include "error.hpp"
#include "jack.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "sympoly.hpp"

using namespace selberg;

TEST_CASE("known small expansions") {
  JackTable table;
  SymCache cache;

  // P_(2) = m_2 + 2/(1+alpha) m_{1,1}.
  for (const Rational& alpha :
       {make_rational(1, 2), Rational(1), Rational(2), make_rational(2, 3)}) {
    SymPoly p2 = table.jack(Partition({2}), alpha, 2, cache);
    CHECK(p2.coefficient(Partition({2})) == 1);
    CHECK(p2.coefficient(Partition({1, 1})) == Rational(2) / (Rational(1) + alpha));
  }

  // The dominance-minimal element is a bare monomial.
  CHECK(table.jack(Partition({1, 1}), Rational(2), 2, cache) ==
        sym_monomial(Partition({1, 1}), 2));

  // P_(2,1) = m_{2,1} + 6/(alpha+2) m_{1,1,1}.
  SymPoly p21 = table.jack(Partition({2, 1}), make_rational(1, 2), 3, cache);
  CHECK(p21.coefficient(Partition({2, 1})) == 1);
  CHECK(p21.coefficient(Partition({1, 1, 1})) == make_rational(12, 5));
}

TEST_CASE("alpha = 1 specializes to schur") {
  JackTable table;
  SymCache cache;
  for (int w = 1; w <= 4; ++w) {
    for (const Partition& lam : partitions_of(w, w)) {
      CHECK(table.jack(lam, Rational(1), w, cache) == schur(lam, w));
    }
  }
}

TEST_CASE("orthogonality and unitriangularity") {
  JackTable table;
  SymCache cache;
  for (const Rational& alpha : {make_rational(1, 2), Rational(2), make_rational(2, 3)}) {
    for (int w = 1; w <= 4; ++w) {
      std::vector<Partition> parts = partitions_of(w, w);
      for (size_t i = 0; i < parts.size(); ++i) {
        SymPoly pi = table.jack(parts[i], alpha, w, cache);
        CHECK(pi.coefficient(parts[i]) == 1);
        for (const auto& [mu, c] : pi.terms) {
          CHECK(dominance_leq(mu, parts[i]));
        }
        for (size_t j = i + 1; j < parts.size(); ++j) {
          SymPoly pj = table.jack(parts[j], alpha, w, cache);
          CHECK(alpha_inner_product(pi, pj, alpha, cache) == 0);
        }
        CHECK(alpha_inner_product(pi, pi, alpha, cache) != 0);
      }
    }
  }
}

TEST_CASE("restriction to fewer variables") {
  JackTable table;
  SymCache cache;
  SymPoly r = jack_restricted(Partition({2}), Rational(2), 1, table, cache);
  CHECK(r.nvars == 1);
  CHECK(r == sym_monomial(Partition({2}), 1));
  SymPoly gone = jack_restricted(Partition({1, 1, 1}), Rational(2), 2, table, cache);
  CHECK(gone.is_zero());
  // Restriction of P_(2,1) to 2 variables drops the m_{1,1,1} tail.
  SymPoly p21 = jack_restricted(Partition({2, 1}), make_rational(1, 2), 2, table, cache);
  CHECK(p21 == sym_monomial(Partition({2, 1}), 2));
}

TEST_CASE("usage guards") {
  JackTable table;
  SymCache cache;
  CHECK_THROWS_AS(table.jack(Partition({2}), Rational(0), 2, cache), Error);
  CHECK_THROWS_AS(table.jack(Partition({2}), Rational(-1), 2, cache), Error);
  CHECK_THROWS_AS(table.jack(Partition({2, 1}), Rational(1), 1, cache), Error);
}

TEST_CASE("cache serialization round-trips") {
  JackTable table;
  SymCache cache;
  SymPoly p2 = table.jack(Partition({2}), Rational(2), 2, cache);
  CHECK(table.dirty());
  std::string text = table.serialize();
  CHECK(text.rfind("selberg-jack-cache v1", 0) == 0);
  CHECK(text.find("alpha=2/1 nvars=2 lambda=2 : 2=1/1;1,1=2/3") != std::string::npos);

  JackTable reloaded;
  reloaded.merge_serialized(text);
  CHECK(reloaded.size() == table.size());
  CHECK(reloaded.jack(Partition({2}), Rational(2), 2, cache) == p2);

  JackTable bad;
  CHECK_THROWS_AS(bad.merge_serialized("selberg-jack-cache v1\nnot a record\n"), Error);
  CHECK_THROWS_AS(bad.merge_serialized("wrong header\n"), Error);
}

TEST_CASE("cache files persist through save and load") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "selberg-jack-test";
  fs::create_directories(dir);
  fs::path file = dir / "table.txt";
  fs::remove(file);

  JackTable table;
  SymCache cache;
  table.jack(Partition({2, 1}), make_rational(1, 2), 3, cache);
  REQUIRE(table.save_file(file.string()));
  CHECK(fs::exists(file));

  JackTable loaded;
  loaded.load_file(file.string());
  CHECK(loaded.size() == table.size());
  CHECK(loaded.serialize() == table.serialize());

  JackTable fresh;
  fresh.load_file((dir / "missing.txt").string());  // absent file is fine
  CHECK(fresh.size() == 0);
  fs::remove_all(dir);
}
