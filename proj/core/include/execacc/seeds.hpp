#pragma once

#include <cstdint>
#include <string_view>

namespace execacc::seeds {

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Seed of the named stream `name` under `seed`.
constexpr std::uint64_t stream(std::uint64_t seed, std::string_view name) noexcept {
    return mix64(seed ^ mix64(fnv1a(name)));
}

// Seed of round `round_index` of an experiment with `master_seed`.
constexpr std::uint64_t round_seed(std::uint64_t master_seed, std::uint64_t round_index) noexcept {
    return mix64(mix64(master_seed) ^ mix64(round_index + 0x5bd1e995ULL));
}

} // namespace execacc::seeds
