#include "skolem/common.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace skolem {

namespace {

// Pollard rho (Brent variant) for an odd composite with no small factors.
Int rho_factor(const Int& n) {
    for (std::uint64_t seed = 1;; ++seed) {
        Int y(2 + static_cast<unsigned long>(seed)), c(1 + static_cast<unsigned long>(seed % 97));
        Int x = y, d(1), q(1), ys = y;
        unsigned long r = 1, m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd((x > ys) ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor_int(Int n) {
    check_input(n != 0, "factoring zero");
    if (n < 0) n = -n;
    std::map<Int, int> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            ++acc[Int(p)];
            n /= p;
        }
    }
    for (Int p(41); p * p <= n && p < 100000; p = next_prime(p)) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, acc);
    return std::vector<std::pair<Int, int>>(acc.begin(), acc.end());
}

unsigned worker_count() {
    if (const char* env = std::getenv("SKOLEM4_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return hw < 4 ? hw : 4;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned max_threads) {
    if (n == 0) return;
    unsigned workers = max_threads;
    if (workers > n) workers = static_cast<unsigned>(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto body = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace skolem
