#include "pathhom/ring.hpp"

#include "pathhom/error.hpp"

#include <charconv>

namespace pathhom {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Ring Ring::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorCode::InvalidTheory, "coefficient modulus must be a prime below 2^31, got " + std::to_string(p));
    return {Kind::PrimeField, p};
}

Ring Ring::parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.starts_with("Fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime_field(p);
    }
    throw Error(ErrorCode::InvalidTheory, "unknown coefficient ring '" + std::string(text) + "' (expected Z, Q or Fp:P)");
}

std::string Ring::to_string() const {
    switch (kind) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "Fp:" + std::to_string(prime);
    }
    return "?";
}

}  // namespace pathhom
