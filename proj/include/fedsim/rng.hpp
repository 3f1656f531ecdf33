#ifndef FEDSIM_RNG_HPP
#define FEDSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace fedsim {

using Rng = std::mt19937_64;

// splitmix64 finalizer, used to decorrelate derived seeds
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic seed tree: every random decision in the simulator draws from
// an engine seeded by derive_seed(master, tags...), so results do not depend
// on scheduling or call order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = mix64(base);
    s = mix64(s ^ a);
    s = mix64(s ^ b);
    s = mix64(s ^ c);
    return s;
}

inline Rng make_rng(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                    std::uint64_t c = 0) {
    return Rng(derive_seed(base, a, b, c));
}

// Stream tags for derive_seed so independent consumers never collide.
namespace seed_tag {
inline constexpr std::uint64_t kPartition = 0x01;
inline constexpr std::uint64_t kShuffleContrib = 0x02;
inline constexpr std::uint64_t kShufflePerm = 0x03;
inline constexpr std::uint64_t kProblemGen = 0x04;
inline constexpr std::uint64_t kClientSample = 0x05;
inline constexpr std::uint64_t kLocalUpdate = 0x06;
inline constexpr std::uint64_t kGeneratorFit = 0x07;
inline constexpr std::uint64_t kGeneratorSample = 0x08;
inline constexpr std::uint64_t kServerShuffle = 0x09;
inline constexpr std::uint64_t kEvalPoints = 0x0a;
inline constexpr std::uint64_t kEstimator = 0x0b;
inline constexpr std::uint64_t kDigits = 0x0c;
inline constexpr std::uint64_t kInit = 0x0d;
}  // namespace seed_tag

// round-half-to-even; used wherever a fractional count becomes an integer
inline long long round_half_even(double x) {
    return static_cast<long long>(std::nearbyint(x));
}

}  // namespace fedsim

#endif
