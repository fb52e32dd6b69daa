//---------------------------------------------------------------------------//
//! \file qpc/parallel.hpp
//! Deterministic data-parallel loops and fixed-order reductions.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace qpc
{
//---------------------------------------------------------------------------//
/*!
 * Run body(i) for i in [0, count) on up to \c threads worker threads.
 *
 * Work is split into contiguous blocks. Bodies must write only to slots
 * owned by their index; any reduction happens afterwards in index order, so
 * results never depend on the thread count. The first exception thrown by
 * any body is rethrown on the calling thread.
 */
template<class F>
void parallel_for(std::size_t count, unsigned threads, F&& body)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(threads, count);
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
        std::size_t begin = count * w / workers;
        std::size_t end = count * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

//---------------------------------------------------------------------------//
//! Neumaier-compensated sum in index order.
inline double ordered_sum(std::span<double const> values)
{
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values)
    {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

//! Sample mean and standard error (sample std / sqrt(count)).
struct MeanStderr
{
    double mean = 0.0;
    double std_error = 0.0;
};

inline MeanStderr mean_stderr(std::span<double const> values)
{
    MeanStderr r;
    if (values.empty())
        return r;
    auto n = static_cast<double>(values.size());
    r.mean = ordered_sum(values) / n;
    if (values.size() < 2)
        return r;
    std::vector<double> sq(values.size());
    std::transform(values.begin(), values.end(), sq.begin(), [&](double v) {
        return (v - r.mean) * (v - r.mean);
    });
    double var = ordered_sum(sq) / (n - 1.0);
    r.std_error = std::sqrt(var / n);
    return r;
}

}  // namespace qpc
