#pragma once

#include <optional>

namespace qmetro {

/// Caps the OpenMP worker count for all library kernels.
void set_thread_count(int threads);
int thread_count();

/// Reads QMETRO_THREADS; nullopt when unset or not a positive integer.
std::optional<int> threads_from_environment();

}  // namespace qmetro
