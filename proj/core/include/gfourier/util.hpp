#pragma once

#include <atomic>
#include <charconv>
#include <complex>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace gfourier {

// Thread count: GFOURIER_THREADS env var caps parallelism, 0/unset -> hardware.
inline unsigned thread_count() {
  if (const char* env = std::getenv("GFOURIER_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Runs fn(i) for i in [0,n). Each task owns its output slot; the caller's
// reduction order is index order, so results are deterministic.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned nt = thread_count();
  if (nt <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(nt, n));
  pool.reserve(spawn);
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

// Compensated (Kahan) accumulator.
template <class T>
struct KahanSum {
  T sum{};
  T carry{};
  void add(const T& v) {
    T y = v - carry;
    T t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  const T& value() const { return sum; }
};

// Shortest round-trip decimal (std::to_chars), deterministic across runs.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(std::complex<double> v) {
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
         format_double(std::abs(v.imag())) + "i";
}

}  // namespace gfourier
