#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qlsm {

// 64-bit FNV-1a. Used for sub-seed derivation and for the config/trace
// hashes embedded in output artifacts. Stable across runs on one platform.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64_u64(std::uint64_t v, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (int i = 0; i < 8; ++i) {
        h ^= static_cast<unsigned char>(v >> (8 * i));
        h *= 0x100000001b3ULL;
    }
    return h;
}

// All randomness flows from one global seed; every consumer derives its own
// stream by name so that adding a consumer never shifts another one's draws.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view name) {
    return fnv1a64(name, fnv1a64_u64(global_seed));
}

inline std::mt19937_64 make_rng(std::uint64_t global_seed, std::string_view name) {
    return std::mt19937_64(derive_seed(global_seed, name));
}

}  // namespace qlsm
