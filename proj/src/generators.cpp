#include "mindef/generators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mindef {

namespace {

bool unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

std::size_t rounded(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

std::vector<ArgIndex> shuffled(std::size_t n, SplitMix64& rng) {
    std::vector<ArgIndex> order(n);
    std::iota(order.begin(), order.end(), ArgIndex{0});
    for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[rng.below(i + 1)]);
    return order;
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

Instance make(std::string name, const std::vector<std::string>& args, const Pairs& attacks,
              const std::vector<std::string>& focus, const std::vector<std::string>& restricted) {
    ArgumentationFramework af = build_framework(args, attacks);
    Partition p = focus.empty() && restricted.empty() ? Partition::vacuous(af)
                                                      : build_partition(af, focus, restricted);
    return Instance{std::move(name), std::move(af), std::move(p)};
}

}  // namespace

void GeneratorConfig::validate() const {
    if (!unit_interval(attack_probability)) throw std::invalid_argument("attack_probability outside [0,1]");
    if (!unit_interval(focus_fraction)) throw std::invalid_argument("focus_fraction outside [0,1]");
    if (!unit_interval(restricted_fraction)) throw std::invalid_argument("restricted_fraction outside [0,1]");
}

Instance random_instance(const GeneratorConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.argument_count;
    SplitMix64 rng(cfg.seed);

    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));

    std::vector<std::size_t> rank(n);
    if (cfg.acyclic_only) {
        const auto order = shuffled(n, rng);
        for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
    }

    Pairs attacks;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (cfg.acyclic_only && rank[a] >= rank[b]) continue;
            if (rng.next_unit() < cfg.attack_probability) attacks.emplace_back(names[a], names[b]);
        }
    }

    const auto pick = shuffled(n, rng);
    const std::size_t focus_count = std::min(n, rounded(cfg.focus_fraction * static_cast<double>(n)));
    const std::size_t restricted_count =
        std::min(focus_count, rounded(cfg.restricted_fraction * static_cast<double>(focus_count)));

    ArgumentationFramework af = build_framework(names, attacks);
    ArgumentSet focus = af.empty_set();
    ArgumentSet restricted = af.empty_set();
    for (std::size_t i = 0; i < focus_count; ++i) {
        focus.insert(pick[i]);
        if (i < restricted_count) restricted.insert(pick[i]);
    }
    Partition p(std::move(focus), restricted);
    return Instance{"random-" + std::to_string(cfg.seed), std::move(af), std::move(p)};
}

std::vector<Instance> reference_fixtures() {
    const std::vector<std::string> args = {"u1", "u2", "u3", "u4", "u5", "r1", "r2",
                                           "r3", "r4", "o1", "o2", "o3", "o4", "o5"};
    const Pairs attacks = {{"o1", "u1"}, {"o2", "u2"}, {"u3", "o2"}, {"o3", "u4"}, {"u5", "o4"},
                           {"r1", "o2"}, {"r2", "o3"}, {"o4", "r3"}, {"o5", "r4"}};
    const std::vector<std::string> unrestricted = {"u1", "u2", "u3", "u4", "u5"};
    const std::vector<std::string> restricted = {"r1", "r2", "r3", "r4"};
    std::vector<std::string> focus = unrestricted;
    focus.insert(focus.end(), restricted.begin(), restricted.end());

    std::vector<Instance> out;
    out.push_back(make("AF1", args, attacks, {}, {}));
    out.push_back(make("AF2", args, attacks, focus, {}));
    out.push_back(make("AF3", args, attacks, unrestricted, restricted));
    out.push_back(make("ABC", {"a", "b", "c"}, {{"c", "b"}, {"b", "a"}}, {"a"}, {}));
    return out;
}

Instance reference_fixture(std::string_view name) {
    for (auto& f : reference_fixtures()) {
        if (f.name == name) return std::move(f);
    }
    throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

}  // namespace mindef
