#include "homcalc/ints.hpp"

#include <boost/multiprecision/integer.hpp>

namespace homcalc {

Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd_int(g, x);
        if (g == 1) break;
    }
    return g;
}

namespace {

Int pow_mod(Int base, Int exp, const Int& mod) {
    return boost::multiprecision::powm(base, exp, mod);
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    if (a % n == 0) return false;
    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    Int x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    // Brent's cycle variant with a shifting increment.
    for (Int c = 1; ; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd_int(abs_int(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (int a : small_primes) {
        if (miller_rabin_witness(n, a)) return false;
    }
    return true;
}

std::vector<Int> prime_divisors(const Int& n) {
    Int m = abs_int(n);
    std::vector<Int> primes;
    if (m <= 1) return primes;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    // Trial division up to 10^4 catches everything desk-scale SNF produces;
    // Pollard rho handles the rare large cofactor.
    for (Int p = 17; p * p <= m && p < 10000; p += 2) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) {
        std::vector<Int> rest;
        factor_into(m, rest);
        std::sort(rest.begin(), rest.end());
        rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
        primes.insert(primes.end(), rest.begin(), rest.end());
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

std::string to_decimal(const Int& v) { return v.str(); }

Int parse_decimal(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InvalidInput("bad integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw InvalidInput("bad integer literal: " + s);
    return Int(s);
}

}  // namespace homcalc
