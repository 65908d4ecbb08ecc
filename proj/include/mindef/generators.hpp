#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mindef/framework.hpp"

namespace mindef {

/// SplitMix64 (Steele, Lea & Flood). The generator contract, and hence
/// every generated instance, depends only on this exact sequence.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): top 53 bits of next() scaled by 2^-53.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// next() mod bound; bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct GeneratorConfig {
    std::size_t argument_count = 0;
    double attack_probability = 0.0;
    double focus_fraction = 1.0;
    double restricted_fraction = 0.0;  // of the focus
    std::uint64_t seed = 0;
    bool acyclic_only = false;

    /// Throws std::invalid_argument if a fraction or probability is outside [0, 1].
    void validate() const;
};

struct Instance {
    std::string name;
    ArgumentationFramework af;
    Partition partition;
};

/// Random framework and partition, fully determined by the config:
///  1. arguments are named a0..a{n-1};
///  2. if acyclic_only, a random order is drawn by Fisher-Yates
///     (for i = n-1 down to 1: swap(order[i], order[below(i+1)])) and only
///     pairs placed earlier-to-later in it are candidate attacks;
///  3. every candidate ordered pair (a, b), scanned a-major then b, is an
///     attack iff next_unit() < attack_probability (self-pairs are
///     candidates unless acyclic_only);
///  4. a second Fisher-Yates shuffle of 0..n-1 is drawn; the first
///     round(focus_fraction * n) indices form the focus and the first
///     round(restricted_fraction * |focus|) of those are restricted.
Instance random_instance(const GeneratorConfig& cfg);

/// The worked examples: "AF1" (vacuous partition), "AF2" (type-1, F_r empty),
/// "AF3" (type-2) and "ABC" (3-chain, focus {a}).
std::vector<Instance> reference_fixtures();

/// Looks up one fixture by name; throws std::out_of_range if unknown.
Instance reference_fixture(std::string_view name);

}  // namespace mindef
