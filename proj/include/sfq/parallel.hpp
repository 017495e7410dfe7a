// parallel.hpp — Fixed-size worker pool for generation-synchronous parallel maps

#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sfq {

// Blocking parallel-for over an index range. Work items grab indices from a
// shared counter, so results must depend only on the index, never on the
// executing thread. With one worker everything runs inline on the caller.
class ThreadPool {
public:
    explicit ThreadPool(int workers) : workers_(workers < 1 ? 1 : workers) {
        for (int i = 0; i + 1 < workers_; ++i) {
            threads_.emplace_back([this] { worker_loop(); });
        }
    }

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    ~ThreadPool() {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            stop_ = true;
        }
        wake_.notify_all();
        for (auto& t : threads_) t.join();
    }

    int workers() const { return workers_; }

    void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
        if (n == 0) return;
        if (workers_ == 1 || n == 1) {
            for (std::size_t i = 0; i < n; ++i) body(i);
            return;
        }
        {
            std::lock_guard<std::mutex> lock(mutex_);
            body_ = &body;
            total_ = n;
            next_.store(0, std::memory_order_relaxed);
            done_.store(0, std::memory_order_relaxed);
            error_ = nullptr;
            ++epoch_;
        }
        wake_.notify_all();
        run_items();
        {
            std::unique_lock<std::mutex> lock(mutex_);
            finished_.wait(lock, [this] { return done_.load(std::memory_order_acquire) == total_; });
            body_ = nullptr;
            if (error_) {
                auto err = error_;
                error_ = nullptr;
                std::rethrow_exception(err);
            }
        }
    }

    // Apply the SFQ_EVOLVE_THREADS cap to a requested worker count.
    static int resolve_workers(int requested) {
        int w = requested < 1 ? 1 : requested;
        if (const char* env = std::getenv("SFQ_EVOLVE_THREADS")) {
            char* end = nullptr;
            long cap = std::strtol(env, &end, 10);
            if (end != env && cap > 0 && cap < w) w = static_cast<int>(cap);
        }
        return w;
    }

private:
    void run_items() {
        const std::function<void(std::size_t)>* body = body_;
        std::size_t total = total_;
        std::size_t completed = 0;
        for (;;) {
            std::size_t i = next_.fetch_add(1, std::memory_order_relaxed);
            if (i >= total) break;
            try {
                (*body)(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mutex_);
                if (!error_) error_ = std::current_exception();
            }
            ++completed;
        }
        if (completed > 0 &&
            done_.fetch_add(completed, std::memory_order_acq_rel) + completed == total) {
            std::lock_guard<std::mutex> lock(mutex_);
            finished_.notify_all();
        }
    }

    void worker_loop() {
        std::uint64_t seen = 0;
        for (;;) {
            {
                std::unique_lock<std::mutex> lock(mutex_);
                wake_.wait(lock, [this, seen] { return stop_ || epoch_ != seen; });
                if (stop_) return;
                seen = epoch_;
            }
            run_items();
        }
    }

    int workers_;
    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable finished_;
    const std::function<void(std::size_t)>* body_ = nullptr;
    std::size_t total_ = 0;
    std::atomic<std::size_t> next_{0};
    std::atomic<std::size_t> done_{0};
    std::exception_ptr error_;
    std::uint64_t epoch_ = 0;
    bool stop_ = false;
};

}  // namespace sfq
