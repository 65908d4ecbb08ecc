#pragma once

// Test-only helpers: name conversions, seeded instance configs, and
// reference computations that do not go through the library's algorithms.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mindef/extensions.hpp"
#include "mindef/framework.hpp"
#include "mindef/generators.hpp"

namespace mindef::test {

using Names = std::vector<std::string>;

inline Names names_of(const ArgumentationFramework& af, const ArgumentSet& s) { return af.sorted_names(s); }

inline std::vector<Names> names_of(const ArgumentationFramework& af, const ExtensionFamily& f) {
    std::vector<Names> out;
    for (const auto& s : f) out.push_back(af.sorted_names(s));
    return out;
}

/// Config for the i-th instance of the seeded random corpus: n = i mod 11,
/// p cycles through {0.1, 0.25, 0.5}, focus and restricted fractions vary.
inline GeneratorConfig corpus_config(std::size_t i, std::uint64_t salt = 0) {
    static constexpr std::array<double, 3> probabilities{0.1, 0.25, 0.5};
    static constexpr std::array<double, 4> focus_fractions{1.0, 0.8, 0.6, 0.5};
    static constexpr std::array<double, 5> restricted_fractions{0.0, 0.25, 0.4, 0.5, 0.75};
    GeneratorConfig cfg;
    cfg.argument_count = i % 11;
    cfg.attack_probability = probabilities[i % 3];
    cfg.focus_fraction = focus_fractions[(i / 3) % 4];
    cfg.restricted_fraction = restricted_fractions[(i / 7) % 5];
    cfg.seed = 0x5EED0000ULL + i + (salt << 32);
    return cfg;
}

/// Every subset of `space`, in bit-pattern order.
inline std::vector<ArgumentSet> all_subsets(const ArgumentationFramework& af, const ArgumentSet& space) {
    const auto members = space.members();
    std::vector<ArgumentSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << members.size()); ++m) {
        ArgumentSet s = af.empty_set();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (m >> i & 1U) s.insert(members[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// Recursive three-colour DFS over the attack graph.
inline bool dfs_has_cycle(const ArgumentationFramework& af) {
    std::vector<int> colour(af.size(), 0);  // 0 white, 1 on stack, 2 done
    std::function<bool(ArgIndex)> visit = [&](ArgIndex v) {
        colour[v] = 1;
        for (auto w : af.targets(v)) {
            if (colour[w] == 1) return true;
            if (colour[w] == 0 && visit(w)) return true;
        }
        colour[v] = 2;
        return false;
    };
    for (ArgIndex v = 0; v < af.size(); ++v) {
        if (colour[v] == 0 && visit(v)) return true;
    }
    return false;
}

/// Individual defenders from powers of the boolean "is attacked by" matrix:
/// c defends a iff (M^k)[a][c] for some even k in [2, 2n].
inline ArgumentSet matrix_walk_defenders(const ArgumentationFramework& af, ArgIndex a) {
    const std::size_t n = af.size();
    using Matrix = std::vector<std::vector<bool>>;
    Matrix step(n, std::vector<bool>(n, false));
    for (auto [from, to] : af.attacks()) step[to][from] = true;
    auto multiply = [n](const Matrix& x, const Matrix& y) {
        Matrix z(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (x[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (y[k][j]) z[i][j] = true;
        return z;
    };
    ArgumentSet out = af.empty_set();
    Matrix power = step;
    for (std::size_t k = 2; k <= 2 * n; ++k) {
        power = multiply(power, step);
        if (k % 2 == 0) {
            for (std::size_t c = 0; c < n; ++c)
                if (power[a][c]) out.insert(c);
        }
    }
    return out;
}

}  // namespace mindef::test
