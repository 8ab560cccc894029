#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

/// Thrown for malformed or schema-violating input (CLI exit code 2).
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when data fails a structural sanity check that only a
/// non-realizable presentation can fail (CLI exit code 2).
struct InvalidPresentation : InvalidInput {
    explicit InvalidPresentation(const std::string& msg) : InvalidInput(msg) {}
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

/// gcd of all entries; 0 for the zero vector. A vector is primitive
/// exactly when its content is 1.
Int content(const Vec& v);

/// Deterministic Miller-Rabin, exact for all inputs below 3.3e24 and
/// overwhelmingly reliable beyond (witness set 2..37).
bool is_prime(const Int& n);

/// Distinct prime divisors, sorted ascending. Trial division plus
/// Pollard rho for large cofactors.
std::vector<Int> prime_divisors(const Int& n);

std::string to_decimal(const Int& v);
Int parse_decimal(const std::string& s);

}  // namespace homcalc
