#pragma once

namespace mf {

/// Worker count for the OpenMP kernels: MATCHFIELD_THREADS when set,
/// otherwise the OpenMP default; always at least 1. Serial builds
/// (no OpenMP) report 1.
int thread_count();

}  // namespace mf
