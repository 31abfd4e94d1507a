// Error taxonomy shared by the whole library.  Every failure is thrown as an
// Error carrying one of the Status values that the C API and CLI map to exit
// codes: usage (bad input / unsupported parameters), disagree (cross-method
// mismatch), resource (a configured guard was exceeded), internal (a proven
// invariant failed, which indicates a bug).
#pragma once

#include <stdexcept>
#include <string>

namespace selberg {

enum class Status {
  ok = 0,
  usage = 1,
  disagree = 2,
  resource = 3,
  internal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail_usage(const std::string& m) { throw Error(Status::usage, m); }
[[noreturn]] inline void fail_resource(const std::string& m) { throw Error(Status::resource, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(Status::internal, m); }

// Always-on invariant check (not compiled out in release builds): exact
// cross-validation is the point of this library, so broken invariants must
// surface loudly.
inline void check_internal(bool ok, const std::string& m) {
  if (!ok) fail_internal(m);
}

inline void check_usage(bool ok, const std::string& m) {
  if (!ok) fail_usage(m);
}

}  // namespace selberg
