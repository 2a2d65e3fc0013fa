#include "samelson/bigint.hpp"

#include <stdexcept>

namespace samelson {

BigInt binomial(const BigInt& n, long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    // num is divisible by den: C(n, k) is integral for every integer n
    return num / den;
}

int p_valuation(BigInt n, long p) {
    if (n == 0) throw std::invalid_argument("p_valuation of zero");
    if (p < 2) throw std::invalid_argument("p_valuation: bad prime");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace samelson
