#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pathhom {

/// Coefficient ring for homology: the integers, the rationals, or a prime field.
///
/// Lattice bases and boundary matrices are always integral; the ring only
/// decides how kernels and ranks are read off them.
struct Ring {
    enum class Kind { Integers, Rationals, PrimeField };

    Kind kind = Kind::Integers;
    std::uint64_t prime = 0;  // meaningful for PrimeField only

    static Ring integers() { return {}; }
    static Ring rationals() { return {Kind::Rationals, 0}; }
    /// Throws Error(InvalidTheory) unless p is a prime below 2^31.
    static Ring prime_field(std::uint64_t p);

    /// Accepts "Z", "Q" and "Fp:P".
    static Ring parse(std::string_view text);

    bool is_field() const { return kind != Kind::Integers; }
    std::string to_string() const;

    friend bool operator==(const Ring&, const Ring&) = default;
};

bool is_prime(std::uint64_t n);

}  // namespace pathhom
