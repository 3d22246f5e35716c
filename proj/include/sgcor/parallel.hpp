#pragma once

namespace sgcor::parallel {

/// Threads used by the OpenMP kernels.
int max_threads();

/// n <= 0 restores the OpenMP default.
void set_threads(int n);

/// Applies SGCOR_THREADS when it is set to a positive integer. Returns the
/// resulting thread count.
int configure_from_environment();

}  // namespace sgcor::parallel
