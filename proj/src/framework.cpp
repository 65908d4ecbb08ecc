#include "mindef/framework.hpp"

#include <algorithm>
#include <atomic>

#include "mindef/errors.hpp"

namespace mindef {

namespace {

FrameworkId next_framework_id() {
    static std::atomic<std::uint64_t> counter{1};
    return FrameworkId{counter.fetch_add(1, std::memory_order_relaxed)};
}

}  // namespace

ArgumentationFramework::ArgumentationFramework() : id_(next_framework_id()) {}

std::optional<ArgIndex> ArgumentationFramework::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ArgIndex ArgumentationFramework::index_of(std::string_view name) const {
    if (auto a = find(name)) return *a;
    throw UndeclaredArgument(std::string(name));
}

ArgumentSet ArgumentationFramework::full_set() const {
    ArgumentSet s = empty_set();
    for (ArgIndex a = 0; a < size(); ++a) s.insert(a);
    return s;
}

ArgumentSet ArgumentationFramework::make_set(std::span<const std::string> names) const {
    ArgumentSet s = empty_set();
    for (const auto& n : names) s.insert(index_of(n));
    return s;
}

ArgumentSet ArgumentationFramework::make_set(std::initializer_list<std::string_view> names) const {
    ArgumentSet s = empty_set();
    for (auto n : names) s.insert(index_of(n));
    return s;
}

ArgumentSet ArgumentationFramework::make_set_from_indices(std::span<const ArgIndex> indices) const {
    ArgumentSet s = empty_set();
    for (auto a : indices) s.insert(a);
    return s;
}

std::vector<std::string> ArgumentationFramework::sorted_names(const ArgumentSet& s) const {
    if (s.framework() != id_) throw CrossFrameworkSet();
    std::vector<std::string> out;
    for (auto a : s) out.push_back(names_[a]);
    std::sort(out.begin(), out.end());
    return out;
}

ArgumentationFramework build_framework(
    std::span<const std::string> names,
    std::span<const std::pair<std::string, std::string>> attack_pairs) {
    ArgumentationFramework af;
    for (const auto& n : names) {
        if (af.index_.emplace(n, af.names_.size()).second) af.names_.push_back(n);
    }
    for (const auto& [from, to] : attack_pairs) {
        af.attacks_.emplace_back(af.index_of(from), af.index_of(to));
    }
    std::sort(af.attacks_.begin(), af.attacks_.end());
    af.attacks_.erase(std::unique(af.attacks_.begin(), af.attacks_.end()), af.attacks_.end());

    af.attackers_.assign(af.size(), af.empty_set());
    af.targets_.assign(af.size(), af.empty_set());
    for (auto [from, to] : af.attacks_) {
        af.attackers_[to].insert(from);
        af.targets_[from].insert(to);
    }
    return af;
}

bool is_well_founded_on(const ArgumentationFramework& af, const ArgumentSet& x) {
    if (x.framework() != af.id()) throw CrossFrameworkSet();
    // Kahn: repeatedly peel vertices with no remaining in-edges inside x.
    std::vector<std::size_t> in_degree(af.size(), 0);
    for (auto a : x) in_degree[a] = (af.attackers(a) & x).size();
    std::vector<ArgIndex> ready;
    for (auto a : x) {
        if (in_degree[a] == 0) ready.push_back(a);
    }
    std::size_t peeled = 0;
    while (!ready.empty()) {
        ArgIndex a = ready.back();
        ready.pop_back();
        ++peeled;
        for (auto t : af.targets(a) & x) {
            if (--in_degree[t] == 0) ready.push_back(t);
        }
    }
    return peeled == x.size();
}

bool is_well_founded(const ArgumentationFramework& af) { return is_well_founded_on(af, af.full_set()); }

Partition::Partition(ArgumentSet focus, const ArgumentSet& restricted)
    : focus_(std::move(focus)), restricted_(restricted), unrestricted_() {
    focus_ |= restricted_;
    unrestricted_ = focus_ - restricted_;
}

Partition Partition::vacuous(const ArgumentationFramework& af) {
    return Partition(af.full_set(), af.empty_set());
}

Partition build_partition(const ArgumentationFramework& af,
                          std::span<const std::string> focus,
                          std::span<const std::string> restricted) {
    return Partition(af.make_set(focus), af.make_set(restricted));
}

std::pair<ArgumentSet, ArgumentSet> split(const ArgumentSet& s, const Partition& p) {
    return {s & p.unrestricted(), s & p.restricted()};
}

}  // namespace mindef
