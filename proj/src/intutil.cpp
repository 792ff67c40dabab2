#include "delpezzo/intutil.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <random>
#include <stdexcept>

namespace delpezzo {

bool is_perfect_square(const Integer& n, Integer* root) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

namespace {

Integer gcd_int(Integer a, Integer b) {
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

Integer pollard_rho(const Integer& n) {
    static std::mt19937_64 rng(0x5eed1234abcdULL);
    if (n % 2 == 0) return 2;
    while (true) {
        Integer x = Integer(rng()) % n, y = x, c = Integer(rng()) % n + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = gcd_int(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    // Strip small primes first; rho handles the rest.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            out[Integer(p)] += 1;
            n /= p;
        }
        if (n == 1) return;
    }
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<Integer, int> factorize(Integer n) {
    if (n < 1) throw std::invalid_argument("factorize: needs n >= 1");
    std::map<Integer, int> out;
    factor_into(n, out);
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n, size_t cap) {
    if (n == 0) throw std::invalid_argument("positive_divisors: zero has no finite list");
    Integer m = n < 0 ? Integer(-n) : n;
    auto fac = factorize(m);
    std::vector<Integer> divs{1};
    for (auto& [p, e] : fac) {
        size_t base = divs.size();
        if (base * (e + 1) > cap) throw std::runtime_error("positive_divisors: divisor count cap exceeded");
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace delpezzo
