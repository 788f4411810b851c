#ifndef ORDSEL_ERRORS_HPP
#define ORDSEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordsel {

// Bad input: rejected preconditions, malformed data, out-of-scope requests.
// The CLI maps these to exit code 2.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Tripwires and resource exhaustion inside the library itself (a failed
// reciprocity self-check, an inconclusive numeric search). CLI exit code 1.
class internal_error : public std::runtime_error {
  public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ordsel

#endif
