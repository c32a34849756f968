#ifndef PHOTSUB_ERRORS_HPP
#define PHOTSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace photsub {

// Exit-code mapping used by the CLI: argument/domain -> 2,
// precision -> 3, unreachable target -> 4.

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when a numerical guarantee cannot be met (grid too narrow,
// unresolved integral, failed refinement check). Carries the offending
// magnitude when one is available.
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& msg, double magnitude = 0.0)
      : std::runtime_error(msg), magnitude(magnitude) {}
  double magnitude;
};

// A requested design target cannot be met anywhere in the search range.
struct unreachable_error : std::runtime_error {
  explicit unreachable_error(const std::string& msg, double best_achieved = 0.0)
      : std::runtime_error(msg), best_achieved(best_achieved) {}
  double best_achieved;
};

struct unsupported_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace photsub

#endif
