#pragma once

namespace young_endo {

// Thread count requested via YOUNG_ENDO_THREADS: "0" forces sequential runs
// (returned as 1), a positive value caps the worker count, and an unset or
// unparsable variable returns 0, meaning "let the runtime decide".
int thread_budget();

} // namespace young_endo
