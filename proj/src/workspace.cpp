#include "workspace.hpp"

#include <cstdlib>

namespace selberg {

std::string Workspace::default_cache_dir() {
  if (const char* env = std::getenv("SELBERG_CACHE_DIR"); env && *env) {
    return env;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::string(xdg) + "/selberg";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::string(home) + "/.cache/selberg";
  }
  return ".selberg-cache";
}

std::string Workspace::jack_cache_path() {
  std::lock_guard<std::mutex> lock(cache_dir_mutex_);
  if (cache_dir.empty()) cache_dir = default_cache_dir();
  return cache_dir + "/jack-cache.txt";
}

void Workspace::ensure_jack_cache_loaded() {
  std::string path = jack_cache_path();
  {
    std::lock_guard<std::mutex> lock(cache_dir_mutex_);
    if (cache_loaded_) return;
    cache_loaded_ = true;
  }
  try {
    jacktable.load_file(path);
  } catch (const Error& e) {
    throw Error(e.status(), std::string(e.what()) + " (while loading " + path +
                                "; delete the file to rebuild it)");
  }
}

bool Workspace::save_jack_cache_if_dirty() {
  if (!jacktable.dirty()) return true;
  return jacktable.save_file(jack_cache_path());
}

const ClosedForm& Workspace::cached_closed_form(int n, int d) {
  {
    std::lock_guard<std::mutex> lock(closed_forms_mutex_);
    auto it = closed_forms_.find({n, d});
    if (it != closed_forms_.end()) return it->second;
  }
  ClosedForm cf = closed_form_by_jack(n, d, *this);
  std::lock_guard<std::mutex> lock(closed_forms_mutex_);
  return closed_forms_.emplace(std::make_pair(n, d), std::move(cf)).first->second;
}

}  // namespace selberg
