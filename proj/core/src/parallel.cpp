#include "linper/parallel.hpp"

#include <cstdlib>
#include <string>

namespace linper {

int default_jobs() {
  if (const char* env = std::getenv("LINPER_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace linper
