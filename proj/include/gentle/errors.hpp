#ifndef GENTLE_ERRORS_HPP
#define GENTLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gentle {

enum class errc {
  not_composable,
  disconnected,
  not_one_cycle,
  not_gentle,
  parameter_out_of_range,
  not_finite_dimensional,
  mixed_quiver,
  infinite_dimensional,
  projective_input,
  r_zero,
  unsupported_shape,
  unsupported_family,
  degenerate_boundary,
  bad_interval,
  bad_argument,
};

const char* errc_name(errc c);

/// Domain error carrying a machine-checkable code alongside the message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace gentle

#endif
