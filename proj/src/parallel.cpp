#include "critgraph/parallel.hpp"

#include <cstdlib>
#include <string>

namespace critgraph {

std::size_t default_workers() {
  const char* env = std::getenv("CRITGRAPH_WORKERS");
  if (!env || !*env) return 1;
  try {
    const long v = std::stol(env);
    return v > 0 ? static_cast<std::size_t>(v) : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace critgraph
