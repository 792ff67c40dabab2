// Integer helpers: factorization, divisor enumeration, square detection.
#pragma once

#include "delpezzo/rational.hpp"

#include <map>
#include <vector>

namespace delpezzo {

bool is_perfect_square(const Integer& n, Integer* root = nullptr);

// Prime factorization of n >= 1 (Miller-Rabin + Pollard rho).
std::map<Integer, int> factorize(Integer n);

// All positive divisors of n != 0, ascending. Throws std::runtime_error if the
// divisor count would exceed the cap (keeps factor searches bounded).
std::vector<Integer> positive_divisors(const Integer& n, size_t cap = 100000);

} // namespace delpezzo
