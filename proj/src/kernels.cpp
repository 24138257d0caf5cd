#include "padic/kernels.hpp"

#include <immintrin.h>

#include <atomic>

namespace padic::kernels {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, x, p);
        x = mulmod(x, x, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t eval_scalar(const std::vector<FpTerm>& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t s = 0;
    for (const auto& t : f) {
        s += mulmod(t.coef, powmod(x, t.exp, p), p);
        if (s >= p) s -= p;
    }
    return s;
}

std::atomic<Backend> g_backend{Backend::Auto};

}  // namespace

void scan_scalar(const std::vector<FpTerm>& f, const std::vector<FpTerm>& df, std::uint64_t p, std::uint64_t lo,
                 std::uint64_t hi, std::uint8_t* flags) {
    for (std::uint64_t x = lo; x < hi; ++x) {
        std::uint8_t fl = 0;
        if (eval_scalar(f, x, p) == 0) fl |= kRoot;
        if (eval_scalar(df, x, p) == 0) fl |= kDerivZero;
        flags[x - lo] = fl;
    }
}

namespace {

__attribute__((target("avx2"))) inline __m256d mulmod_pd(__m256d a, __m256d b, __m256d P, __m256d invP) {
    __m256d prod = _mm256_mul_pd(a, b);  // exact: both operands < 2^26
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, invP));
    __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(q, P));
    // q may be off by one in either direction
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), P));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, P, _CMP_GE_OQ), P));
    return r;
}

__attribute__((target("avx2"))) inline __m256d powmod_pd(__m256d x, std::uint64_t e, __m256d P, __m256d invP) {
    __m256d r = _mm256_set1_pd(1.0);
    while (e) {
        if (e & 1) r = mulmod_pd(r, x, P, invP);
        x = mulmod_pd(x, x, P, invP);
        e >>= 1;
    }
    return r;
}

__attribute__((target("avx2"))) inline __m256d eval_pd(const std::vector<FpTerm>& f, __m256d x, __m256d P,
                                                      __m256d invP) {
    __m256d s = _mm256_setzero_pd();
    for (const auto& t : f) {
        __m256d c = _mm256_set1_pd(static_cast<double>(t.coef));
        s = _mm256_add_pd(s, mulmod_pd(c, powmod_pd(x, t.exp, P, invP), P, invP));
        s = _mm256_sub_pd(s, _mm256_and_pd(_mm256_cmp_pd(s, P, _CMP_GE_OQ), P));
    }
    return s;
}

}  // namespace

__attribute__((target("avx2"))) void scan_avx2(const std::vector<FpTerm>& f, const std::vector<FpTerm>& df,
                                               std::uint64_t p, std::uint64_t lo, std::uint64_t hi,
                                               std::uint8_t* flags) {
    if (p >= kAvx2PrimeLimit) {
        scan_scalar(f, df, p, lo, hi, flags);
        return;
    }
    const __m256d P = _mm256_set1_pd(static_cast<double>(p));
    const __m256d invP = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d zero = _mm256_setzero_pd();
    std::uint64_t x = lo;
    for (; x + 4 <= hi; x += 4) {
        __m256d xv = _mm256_set_pd(double(x + 3), double(x + 2), double(x + 1), double(x));
        int mf = _mm256_movemask_pd(_mm256_cmp_pd(eval_pd(f, xv, P, invP), zero, _CMP_EQ_OQ));
        int md = _mm256_movemask_pd(_mm256_cmp_pd(eval_pd(df, xv, P, invP), zero, _CMP_EQ_OQ));
        for (int l = 0; l < 4; ++l)
            flags[x - lo + l] = static_cast<std::uint8_t>(((mf >> l) & 1) * kRoot | ((md >> l) & 1) * kDerivZero);
    }
    if (x < hi) scan_scalar(f, df, p, x, hi, flags + (x - lo));
}

bool avx2_available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

void set_backend(Backend b) { g_backend.store(b); }
Backend active_backend() { return g_backend.load(); }

ScanFn select(std::uint64_t p) {
    Backend b = g_backend.load();
    bool use_avx2 = (b == Backend::Avx2 || b == Backend::Auto) && avx2_available() && p < kAvx2PrimeLimit;
    return use_avx2 ? &scan_avx2 : &scan_scalar;
}

}  // namespace padic::kernels
