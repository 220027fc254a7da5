#include "subsetconv/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "subsetconv/error.hpp"

namespace subsetconv {

unsigned configured_threads() {
  const char* env = std::getenv("SUBSETCONV_THREADS");
  if (env == nullptr || *env == '\0') {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  std::string_view text(env);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw InvalidArgument("SUBSETCONV_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace subsetconv
