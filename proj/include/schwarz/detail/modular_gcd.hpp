#pragma once

// Polynomial gcd over Z by the small-prime modular method: images mod
// word-sized primes, CRT lifting, and trial division as the final check.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace schwarz::detail {

using IntPoly = std::vector<mpz_class>;   // ascending, no trailing zeros
using ModPoly = std::vector<std::uint64_t>;

inline const std::vector<std::uint64_t>& gcd_primes()
{
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        mpz_class candidate = (1UL << 31) - 1;
        while (out.size() < 2048) {
            if (mpz_probab_prime_p(candidate.get_mpz_t(), 25) != 0) {
                out.push_back(candidate.get_ui());
            }
            candidate -= 2;
        }
        return out;
    }();
    return primes;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp != 0) {
        if ((exp & 1U) != 0) {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

inline void trim(IntPoly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

inline ModPoly reduce_mod(const IntPoly& a, std::uint64_t p)
{
    ModPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    }
    trim(out);
    return out;
}

/// In-place remainder of a by b (b non-zero) modulo p.
inline void rem_mod(ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    const std::uint64_t inv_lead = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t q = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - q * b[i] % p) % p;
        }
        trim(a);
    }
}

/// Monic gcd modulo p; both inputs non-zero.
inline ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p)
{
    while (!b.empty()) {
        rem_mod(a, b, p);
        std::swap(a, b);
    }
    const std::uint64_t inv_lead = inv_mod(a.back(), p);
    for (auto& c : a) {
        c = c * inv_lead % p;
    }
    return a;
}

inline IntPoly primitive_part(IntPoly a)
{
    mpz_class content = 0;
    for (const auto& c : a) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    }
    if (content == 0) {
        return a;
    }
    if (a.back() < 0) {
        content = -content;
    }
    for (auto& c : a) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    }
    return a;
}

/// True iff divisor divides a exactly in Z[x].
inline bool divides(const IntPoly& divisor, IntPoly a)
{
    const mpz_class& lead = divisor.back();
    mpz_class q;
    while (a.size() >= divisor.size()) {
        if (!mpz_divisible_p(a.back().get_mpz_t(), lead.get_mpz_t())) {
            return false;
        }
        mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), lead.get_mpz_t());
        const std::size_t shift = a.size() - divisor.size();
        for (std::size_t i = 0; i < divisor.size(); ++i) {
            a[shift + i] -= q * divisor[i];
        }
        trim(a);
    }
    return a.empty();
}

/// Primitive gcd of two primitive polynomials of positive degree.
/// Returns nullopt if the prime table runs out (caller falls back).
inline std::optional<IntPoly> modular_gcd(const IntPoly& a, const IntPoly& b)
{
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    IntPoly lifted;
    mpz_class modulus;
    long current_degree = -1;

    for (const std::uint64_t p : gcd_primes()) {
        if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) != 0 ||
            mpz_divisible_ui_p(b.back().get_mpz_t(), p) != 0) {
            continue;
        }
        ModPoly image = gcd_mod(reduce_mod(a, p), reduce_mod(b, p), p);
        const long degree = static_cast<long>(image.size()) - 1;
        if (degree == 0) {
            return IntPoly{1};
        }
        if (current_degree != -1 && degree > current_degree) {
            continue; // unlucky prime
        }
        const std::uint64_t gamma_p = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : image) {
            c = c * gamma_p % p;
        }
        if (current_degree == -1 || degree < current_degree) {
            current_degree = degree;
            lifted.assign(image.size(), 0);
            for (std::size_t i = 0; i < image.size(); ++i) {
                lifted[i] = image[i] > p / 2 ? mpz_class(image[i]) - p : mpz_class(image[i]);
            }
            modulus = p;
            continue;
        }

        const std::uint64_t m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        mpz_class next_modulus = modulus * p;
        mpz_class half = next_modulus / 2;
        bool stable = true;
        for (std::size_t i = 0; i < image.size(); ++i) {
            const std::uint64_t old_p = mpz_fdiv_ui(lifted[i].get_mpz_t(), p);
            const std::uint64_t k = (image[i] + p - old_p) % p * m_inv % p;
            if (k == 0) {
                continue;
            }
            stable = false;
            mpz_class v = lifted[i] + modulus * k;
            if (v > half) {
                v -= next_modulus;
            } else if (v < -half) {
                v += next_modulus;
            }
            lifted[i] = v;
        }
        modulus = std::move(next_modulus);
        if (stable) {
            IntPoly candidate = primitive_part(lifted);
            if (divides(candidate, a) && divides(candidate, b)) {
                return candidate;
            }
        }
    }
    return std::nullopt;
}

} // namespace schwarz::detail
