#pragma once

#include <cstdint>
#include <vector>

namespace chief {

bool is_prime(uint64_t n);

/// Distinct prime divisors of n, ascending. prime_divisors(1) is empty.
std::vector<uint64_t> prime_divisors(uint64_t n);

/// Largest power of p dividing n.
uint64_t p_part(uint64_t n, uint64_t p);

} // namespace chief
