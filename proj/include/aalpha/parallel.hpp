#pragma once

namespace aalpha {

// Selects between an OpenMP kernel and its serial reference implementation.
// Both produce identical results; the serial path exists for testing and
// benchmarking.
enum class Execution { serial, parallel };

// Name of the environment variable that overrides the OpenMP thread count.
inline constexpr const char* kThreadsEnv = "AALPHA_THREADS";

// Applies AALPHA_THREADS (when set to a positive integer) to OpenMP.
// Returns the thread count OpenMP will use.
int configure_threads_from_env();

int max_threads();

}  // namespace aalpha
