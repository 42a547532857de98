#pragma once
// Shared primitives: exact rational scalar, hashing, deterministic PRNG,
// 31-bit prime sampling, binomial tables, and the budget-guard exception.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace khc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

// Thrown when a computation would materialize more enhanced-state generators
// than the configured cap allows. Callers are expected to refuse gracefully.
struct BudgetExceeded : std::runtime_error {
    std::uint64_t budget;
    std::uint64_t needed;  // running count at the moment of refusal (lower bound)
    BudgetExceeded(std::uint64_t budget_, std::uint64_t needed_)
        : std::runtime_error("generator budget exceeded: needs > " + std::to_string(needed_) +
                             " of " + std::to_string(budget_)),
          budget(budget_), needed(needed_) {}
};

// FNV-1a, used for content-addressed hashing of diagrams and matrices.
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; i++) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a64_values(const std::vector<std::int64_t>& vals) {
    return fnv1a64(vals.data(), vals.size() * sizeof(std::int64_t));
}

// splitmix64: tiny, deterministic, good enough for seeding and prime sampling.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; bases {2,7,61} decide primality below 2^32.
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint32_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (std::uint32_t a : {2u, 7u, 61u}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; r++) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Uniform random 31-bit prime (in [2^30, 2^31)), by rejection sampling.
inline std::uint32_t random_prime_31(SplitMix64& rng) {
    for (;;) {
        std::uint32_t c = static_cast<std::uint32_t>(rng.next() & 0x3fffffffu) | 0x40000000u | 1u;
        if (is_prime_u32(c)) return c;
    }
}

// Binomial coefficients C(n,k) as uint64; n kept small enough to never overflow.
class BinomialTable {
    std::vector<std::vector<std::uint64_t>> b_;

public:
    explicit BinomialTable(int n_max) : b_(n_max + 1) {
        for (int n = 0; n <= n_max; n++) {
            b_[n].resize(n + 1);
            b_[n][0] = b_[n][n] = 1;
            for (int k = 1; k < n; k++) b_[n][k] = b_[n - 1][k - 1] + b_[n - 1][k];
        }
    }
    std::uint64_t operator()(int n, int k) const {
        if (k < 0 || k > n || n < 0) return 0;
        return b_[n][k];
    }
    int max_n() const { return static_cast<int>(b_.size()) - 1; }
};

// Signed binomial as long long for the closed-form predictors (small arguments).
inline long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; i++) r = r * (n - k + i) / i;
    return r;
}

}  // namespace khc
