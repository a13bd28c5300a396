#include "hooklens/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include <omp.h>

namespace hooklens {

namespace {

int initial_threads()
{
    if (int env = threads_from_env(); env > 0) {
        return env;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int>& threads_slot()
{
    static std::atomic<int> slot{initial_threads()};
    return slot;
}

}  // namespace

int threads_from_env()
{
    const char* raw = std::getenv("HOOKLENS_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    try {
        std::size_t used = 0;
        int v = std::stoi(raw, &used);
        return (used == std::string(raw).size() && v > 0) ? v : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

int default_threads()
{
    return threads_slot().load();
}

void set_default_threads(int threads)
{
    threads_slot().store(threads > 0 ? threads : 1);
}

ThreadScope::ThreadScope(int threads) : previous_(omp_get_max_threads())
{
    omp_set_num_threads(threads > 0 ? threads : 1);
}

ThreadScope::~ThreadScope()
{
    omp_set_num_threads(previous_);
}

}  // namespace hooklens
