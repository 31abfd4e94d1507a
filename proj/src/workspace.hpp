// Shared caches and configuration for one evaluation context.  All members
// are individually thread-safe; pipelines running concurrently over one
// Workspace touch disjoint caches or lock internally.
#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "closedform.hpp"
#include "jack.hpp"
#include "jackeval.hpp"
#include "oracle.hpp"
#include "recurse.hpp"
#include "sympoly.hpp"

namespace selberg {

struct Workspace {
  SymCache symcache;
  JackTable jacktable;
  ExpansionCache expansions;
  RecursionMemo recursion_memo;
  OracleMemo oracle_memo;
  OracleGuard guard;

  // Empty means "resolve default_cache_dir() on first use".
  std::string cache_dir;
  int threads = 0;  // 0 = pick from hardware

  std::string jack_cache_path();
  // Loads the cache file once per workspace; malformed content is a usage
  // error naming the file.
  void ensure_jack_cache_loaded();
  // Persists the Jack table when it grew; returns false when saving failed.
  bool save_jack_cache_if_dirty();

  // SELBERG_CACHE_DIR, else XDG_CACHE_HOME/selberg, else ~/.cache/selberg.
  static std::string default_cache_dir();

  const ClosedForm& cached_closed_form(int n, int d);

 private:
  std::mutex cache_dir_mutex_;
  bool cache_loaded_ = false;
  std::map<std::pair<int, int>, ClosedForm> closed_forms_;
  std::mutex closed_forms_mutex_;
};

}  // namespace selberg
