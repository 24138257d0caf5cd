#pragma once

#include <cstdint>
#include <vector>

namespace padic::kernels {

// One monomial of a polynomial over F_p with its exponent already reduced mod p-1.
struct FpTerm {
    std::uint64_t coef;
    std::uint64_t exp;
};

enum : std::uint8_t { kRoot = 1, kDerivZero = 2 };

enum class Backend { Auto, Scalar, Avx2 };

// Flags for each x in [lo, hi), lo >= 1: kRoot when f(x) = 0, kDerivZero when f'(x) = 0.
// Terms describe f and f' on F_p^* (x^e with e reduced mod p-1).
using ScanFn = void (*)(const std::vector<FpTerm>& f, const std::vector<FpTerm>& df, std::uint64_t p,
                        std::uint64_t lo, std::uint64_t hi, std::uint8_t* flags);

void scan_scalar(const std::vector<FpTerm>& f, const std::vector<FpTerm>& df, std::uint64_t p, std::uint64_t lo,
                 std::uint64_t hi, std::uint8_t* flags);
void scan_avx2(const std::vector<FpTerm>& f, const std::vector<FpTerm>& df, std::uint64_t p, std::uint64_t lo,
               std::uint64_t hi, std::uint8_t* flags);

bool avx2_available();
// The AVX2 path works in exact double arithmetic and needs p < 2^26.
inline constexpr std::uint64_t kAvx2PrimeLimit = 1ULL << 26;

void set_backend(Backend b);
Backend active_backend();
ScanFn select(std::uint64_t p);

}  // namespace padic::kernels
