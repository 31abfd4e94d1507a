#include "jack.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace selberg {

namespace {

struct GramEntry {
  Partition lambda;
  const SymPoly* poly;
  std::vector<Rational> coords;  // power-sum coordinates
  Rational norm;
};

}  // namespace

const SymPoly& JackTable::jack(const Partition& lambda, const Rational& alpha, int nvars,
                               SymCache& symcache) {
  check_usage(alpha > 0, "Jack parameter alpha must be positive");
  check_usage(lambda.length() <= nvars,
              "Jack polynomial of " + lambda.to_bracket_string() + " needs more than " +
                  std::to_string(nvars) + " variables");
  check_usage(lambda.weight() <= nvars,
              "Jack construction requires weight <= variable count (weight " +
                  std::to_string(lambda.weight()) + ", " + std::to_string(nvars) +
                  " variables); build in more variables and restrict");
  Key key{alpha, nvars, lambda};
  {
    std::shared_lock<std::shared_mutex> lock(mutex_);
    auto it = polys_.find(key);
    if (it != polys_.end()) return it->second;
  }
  std::unique_lock<std::shared_mutex> lock(mutex_);
  auto it = polys_.find(key);
  if (it == polys_.end()) {
    construct_weight(alpha, nvars, lambda.weight(), symcache);
    it = polys_.find(key);
    check_internal(it != polys_.end(), "Jack construction missed requested partition");
  }
  return it->second;
}

void JackTable::construct_weight(const Rational& alpha, int nvars, int weight,
                                 SymCache& symcache) {
  const PowerBasis& pb = symcache.basis(weight, nvars);
  std::vector<Rational> z(pb.index.size());
  for (size_t i = 0; i < z.size(); ++i) z[i] = z_lambda_alpha(pb.index[i], alpha);
  auto pairing = [&z](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational total = 0;
    for (size_t i = 0; i < z.size(); ++i) {
      if (a[i] == 0 || b[i] == 0) continue;
      total += a[i] * b[i] * z[i];
    }
    return total;
  };

  // Ascending (dominance-compatible) processing order.
  std::vector<Partition> order(pb.index.rbegin(), pb.index.rend());
  std::vector<GramEntry> done;
  done.reserve(order.size());
  for (const Partition& lambda : order) {
    Key key{alpha, nvars, lambda};
    auto it = polys_.find(key);
    if (it == polys_.end()) {
      SymPoly p = sym_monomial(lambda, nvars);
      std::vector<Rational> y = symcache.power_coordinates(p);
      for (const GramEntry& prev : done) {
        Rational c = pairing(y, prev.coords);
        if (c == 0) continue;
        c /= prev.norm;
        p = sym_sub(p, sym_scale(*prev.poly, c));
        for (size_t i = 0; i < y.size(); ++i) y[i] -= c * prev.coords[i];
      }
      // Monic and triangular: the leading coefficient is 1 and all other
      // support lies strictly below lambda.
      check_internal(p.coefficient(lambda) == 1, "Jack polynomial is not monic");
      for (const auto& [mu, c] : p.terms) {
        check_internal(mu <= lambda, "Jack support escapes above the leading partition");
      }
      Rational norm = pairing(y, y);
      check_internal(norm != 0, "singular Gram-Schmidt system in Jack construction");
      it = polys_.emplace(key, std::move(p)).first;
      dirty_ = true;
      done.push_back(GramEntry{lambda, &it->second, std::move(y), std::move(norm)});
    } else {
      std::vector<Rational> y = symcache.power_coordinates(it->second);
      Rational norm = pairing(y, y);
      check_internal(norm != 0, "cached Jack polynomial has zero norm");
      done.push_back(GramEntry{lambda, &it->second, std::move(y), std::move(norm)});
    }
  }
}

std::string JackTable::serialize() const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  std::string out = "selberg-jack-cache v1\n";
  for (const auto& [key, poly] : polys_) {
    out += "alpha=" + rational_to_fraction_string(key.alpha);
    out += " nvars=" + std::to_string(key.nvars);
    out += " lambda=" + key.lambda.to_string();
    out += " : ";
    bool first = true;
    for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it) {
      if (!first) out += ";";
      first = false;
      out += it->first.to_string() + "=" + rational_to_fraction_string(it->second);
    }
    out += "\n";
  }
  return out;
}

void JackTable::merge_serialized(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  check_usage(static_cast<bool>(std::getline(in, line)) && line == "selberg-jack-cache v1",
              "cache file missing 'selberg-jack-cache v1' header");
  size_t line_no = 1;
  std::unique_lock<std::shared_mutex> lock(mutex_);
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "cache file line " + std::to_string(line_no);
    auto expect = [&](bool ok) { check_usage(ok, where + ": unrecognized record"); };

    expect(line.rfind("alpha=", 0) == 0);
    size_t sp1 = line.find(' ');
    expect(sp1 != std::string::npos);
    Rational alpha = rational_from_string(line.substr(6, sp1 - 6));

    expect(line.compare(sp1 + 1, 6, "nvars=") == 0);
    size_t sp2 = line.find(' ', sp1 + 1);
    expect(sp2 != std::string::npos);
    std::string nvars_text = line.substr(sp1 + 7, sp2 - sp1 - 7);
    expect(!nvars_text.empty() &&
           nvars_text.find_first_not_of("0123456789") == std::string::npos);
    int nvars = std::stoi(nvars_text);

    expect(line.compare(sp2 + 1, 7, "lambda=") == 0);
    size_t sp3 = line.find(' ', sp2 + 1);
    expect(sp3 != std::string::npos);
    Partition lambda = Partition::parse(line.substr(sp2 + 8, sp3 - sp2 - 8));

    expect(line.compare(sp3, 3, " : ") == 0);
    std::string body = line.substr(sp3 + 3);
    expect(!body.empty());

    SymPoly poly = sym_zero(nvars, lambda.weight());
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t semi = body.find(';', pos);
      std::string piece =
          body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
      size_t eq = piece.find('=');
      expect(eq != std::string::npos);
      Partition mu = Partition::parse(piece.substr(0, eq));
      Rational c = rational_from_string(piece.substr(eq + 1));
      expect(c != 0 && mu.length() <= nvars && mu.weight() == lambda.weight());
      expect(poly.terms.emplace(mu, c).second);
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    Key key{alpha, nvars, lambda};
    auto it = polys_.find(key);
    if (it != polys_.end()) {
      check_usage(it->second == poly, where + ": conflicting duplicate record");
    } else {
      polys_.emplace(std::move(key), std::move(poly));
    }
  }
}

void JackTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) return;  // no cache yet
  std::ostringstream buffer;
  buffer << in.rdbuf();
  check_usage(!in.bad(), "failed reading cache file " + path);
  merge_serialized(buffer.str());
}

bool JackTable::save_file(const std::string& path) {
  std::string text = serialize();
  try {
    std::filesystem::path target(path);
    if (target.has_parent_path()) {
      std::filesystem::create_directories(target.parent_path());
    }
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out.is_open()) return false;
      out << text;
      if (!out.good()) return false;
    }
    std::filesystem::rename(tmp, target);
  } catch (const std::filesystem::filesystem_error&) {
    return false;
  }
  std::unique_lock<std::shared_mutex> lock(mutex_);
  dirty_ = false;
  return true;
}

bool JackTable::dirty() const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  return dirty_;
}

size_t JackTable::size() const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  return polys_.size();
}

SymPoly jack_restricted(const Partition& lambda, const Rational& alpha, int n,
                        JackTable& table, SymCache& symcache) {
  int nvars = std::max(n, lambda.weight());
  const SymPoly& full = table.jack(lambda, alpha, nvars, symcache);
  if (nvars == n) return full;
  return restrict_vars(full, n);
}

}  // namespace selberg
