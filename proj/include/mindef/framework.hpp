#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mindef/argument_set.hpp"

namespace mindef {

using Attack = std::pair<ArgIndex, ArgIndex>;

/// A finite abstract argumentation framework (A, R).
///
/// Arguments are opaque names mapped to dense indices 0..n-1 in order of
/// first appearance. The attack relation is stored three ways: as a sorted
/// edge list, and as per-argument attacker and target sets. Immutable once
/// built, so it can be shared freely between concurrent solver calls.
class ArgumentationFramework {
public:
    /// Empty framework.
    ArgumentationFramework();

    FrameworkId id() const noexcept { return id_; }
    std::size_t size() const noexcept { return names_.size(); }
    std::size_t attack_count() const noexcept { return attacks_.size(); }

    const std::string& name(ArgIndex a) const { return names_.at(a); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<ArgIndex> find(std::string_view name) const;
    /// Like find(), but throws UndeclaredArgument.
    ArgIndex index_of(std::string_view name) const;

    /// Attack pairs sorted by (attacker, target).
    std::span<const Attack> attacks() const noexcept { return attacks_; }
    bool attacks(ArgIndex from, ArgIndex to) const { return targets_.at(from).contains(to); }
    const ArgumentSet& attackers(ArgIndex a) const { return attackers_.at(a); }
    const ArgumentSet& targets(ArgIndex a) const { return targets_.at(a); }
    bool self_attacking(ArgIndex a) const { return attacks(a, a); }

    ArgumentSet empty_set() const { return ArgumentSet(id_, size()); }
    ArgumentSet full_set() const;
    ArgumentSet make_set(std::span<const std::string> names) const;
    ArgumentSet make_set(std::initializer_list<std::string_view> names) const;
    ArgumentSet make_set_from_indices(std::span<const ArgIndex> indices) const;
    /// Member names sorted lexicographically.
    std::vector<std::string> sorted_names(const ArgumentSet& s) const;

    friend ArgumentationFramework build_framework(
        std::span<const std::string> names,
        std::span<const std::pair<std::string, std::string>> attack_pairs);

private:
    FrameworkId id_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgIndex> index_;
    std::vector<Attack> attacks_;
    std::vector<ArgumentSet> attackers_;
    std::vector<ArgumentSet> targets_;
};

/// Builds a framework; repeated names and repeated pairs are merged.
/// Throws UndeclaredArgument if a pair names an argument absent from `names`.
ArgumentationFramework build_framework(
    std::span<const std::string> names,
    std::span<const std::pair<std::string, std::string>> attack_pairs);

/// True iff the attack graph has no cycle (a self-attack is a cycle).
bool is_well_founded(const ArgumentationFramework& af);

/// Restriction (X, R') of the attack graph to `x`: true iff it is acyclic.
bool is_well_founded_on(const ArgumentationFramework& af, const ArgumentSet& x);

/// Type-2 partition A = F_u ∪ F_r ∪ (A \ F). A type-1 partition has an
/// empty restricted part.
class Partition {
public:
    /// Both focus and restricted must belong to the same framework; restricted
    /// members are added to the focus.
    Partition(ArgumentSet focus, const ArgumentSet& restricted);

    /// F = A, F_r = ∅.
    static Partition vacuous(const ArgumentationFramework& af);

    const ArgumentSet& focus() const noexcept { return focus_; }
    const ArgumentSet& restricted() const noexcept { return restricted_; }
    const ArgumentSet& unrestricted() const noexcept { return unrestricted_; }
    FrameworkId framework() const noexcept { return focus_.framework(); }
    bool is_type1() const noexcept { return restricted_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    ArgumentSet focus_;
    ArgumentSet restricted_;
    ArgumentSet unrestricted_;
};

Partition build_partition(const ArgumentationFramework& af,
                          std::span<const std::string> focus,
                          std::span<const std::string> restricted);

/// (s ∩ F_u, s ∩ F_r).
std::pair<ArgumentSet, ArgumentSet> split(const ArgumentSet& s, const Partition& p);

}  // namespace mindef
