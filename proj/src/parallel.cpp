#include "qmetro/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include <omp.h>

namespace qmetro {

void set_thread_count(int threads) {
    if (threads < 1) {
        throw std::invalid_argument("thread count must be positive");
    }
    omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

std::optional<int> threads_from_environment() {
    const char* env = std::getenv("QMETRO_THREADS");
    if (env == nullptr) {
        return std::nullopt;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc{} || *ptr != '\0' || value < 1) {
        return std::nullopt;
    }
    return value;
}

}  // namespace qmetro
