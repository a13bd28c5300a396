#pragma once

namespace hooklens {

/// Thread count used by the parallel kernels when the caller does not pass one.
/// Starts at the available parallelism unless HOOKLENS_THREADS is set.
int default_threads();
void set_default_threads(int threads);

/// Reads HOOKLENS_THREADS; returns 0 when unset or not a positive integer.
int threads_from_env();

/// Sets the OpenMP team size for its lifetime and restores the previous one.
class ThreadScope {
public:
    explicit ThreadScope(int threads);
    ~ThreadScope();
    ThreadScope(const ThreadScope&) = delete;
    ThreadScope& operator=(const ThreadScope&) = delete;

private:
    int previous_;
};

}  // namespace hooklens
