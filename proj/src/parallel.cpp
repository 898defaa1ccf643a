#include "young_endo/parallel.hpp"

#include <cstdlib>
#include <string>

namespace young_endo {

int thread_budget() {
    const char* raw = std::getenv("YOUNG_ENDO_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        int v = std::stoi(raw);
        if (v <= 0) return 1;
        return v;
    } catch (...) {
        return 0;
    }
}

} // namespace young_endo
