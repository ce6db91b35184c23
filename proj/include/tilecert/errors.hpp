#ifndef TILECERT_ERRORS_HPP
#define TILECERT_ERRORS_HPP

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>

namespace tilecert {

// Width not supported by the requested construction (e.g. ROC needs k >= 2).
struct WidthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tile budget or step budget exhausted; aborts the current strategy step,
// never the process.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transform preconditions: NotStandard, Collapsing, ...
struct TransformError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Portfolio cancellation (another worker already found a proof).
struct CancelledError : std::runtime_error {
    CancelledError() : std::runtime_error("cancelled") {}
};

// Wall-clock deadline plus a cooperative cancellation flag, threaded
// through long-running loops.
struct RunLimits {
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
    const std::atomic<bool>* cancel = nullptr;

    bool expired() const {
        return std::chrono::steady_clock::now() >= deadline;
    }
    bool cancelled() const { return cancel && cancel->load(std::memory_order_relaxed); }
    void check() const {
        if (cancelled()) throw CancelledError();
        if (expired()) throw BudgetError("time budget exhausted");
    }
};

} // namespace tilecert

#endif
