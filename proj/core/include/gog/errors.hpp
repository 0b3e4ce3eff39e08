#ifndef GOG_ERRORS_HPP
#define GOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gog {

/// Bad user data: malformed files, violated geometric preconditions,
/// unknown ids. Maps to CLI exit code 1.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant. Maps to CLI exit code 2.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

} // namespace gog

#endif
