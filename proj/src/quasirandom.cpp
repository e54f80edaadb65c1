#include "depnet/quasirandom.hpp"

#include <stdexcept>
#include <vector>

namespace depnet {

namespace {

constexpr std::size_t kMaxDims = 1024;

std::vector<std::uint64_t> make_primes(std::size_t count) {
    std::vector<std::uint64_t> primes{2};
    std::uint64_t candidate = 3;
    while (primes.size() < count) {
        bool is_prime = true;
        for (std::uint64_t p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) primes.push_back(candidate);
        candidate += 2;
    }
    return primes;
}

const std::vector<std::uint64_t>& prime_table() {
    static const std::vector<std::uint64_t> primes = make_primes(kMaxDims);
    return primes;
}

}  // namespace

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double value = 0.0;
    double inv = 1.0 / static_cast<double>(base);
    double factor = inv;
    while (index > 0) {
        value += static_cast<double>(index % base) * factor;
        index /= base;
        factor *= inv;
    }
    return value;
}

void halton_point(std::uint64_t index, std::span<double> out) {
    const auto& primes = prime_table();
    if (out.size() > primes.size())
        throw std::invalid_argument("halton_point: dimension too large");
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = radical_inverse(index, primes[j]);
}

}  // namespace depnet
