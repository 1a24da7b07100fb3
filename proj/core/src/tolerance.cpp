#include "treelasso/tolerance.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "treelasso/errors.hpp"

namespace treelasso {

Tolerance Tolerance::from_environment() {
  const char* raw = std::getenv("LASSO_EPSILON");
  if (raw == nullptr || *raw == '\0') return {};
  std::string_view text(raw);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0) ||
      !std::isfinite(value)) {
    throw InputError("LASSO_EPSILON must be a positive number, got '" + std::string(text) + "'");
  }
  return Tolerance{value};
}

}  // namespace treelasso
