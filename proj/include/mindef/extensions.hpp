#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "mindef/framework.hpp"

namespace mindef {

/// Duplicate-free collection of argument sets in canonical order: members
/// are compared as lexicographically sorted tuples of argument names.
class ExtensionFamily {
public:
    ExtensionFamily() = default;
    ExtensionFamily(const ArgumentationFramework& af, std::vector<ArgumentSet> members);

    const std::vector<ArgumentSet>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(const ArgumentSet& s) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const ArgumentSet& operator[](std::size_t i) const { return members_[i]; }

    /// Keeps members satisfying `keep`, preserving canonical order.
    ExtensionFamily filtered(const std::function<bool(const ArgumentSet&)>& keep) const;

    friend bool operator==(const ExtensionFamily&, const ExtensionFamily&) = default;

private:
    std::vector<ArgumentSet> members_;
};

/// Limits on a single search. The argument cap applies to the exhaustive
/// oracle; the wall-clock ceiling applies to every search.
struct SearchBudget {
    std::size_t max_arguments_for_exhaustive = 20;
    std::optional<std::chrono::milliseconds> wall_clock;
};

struct SubsetInclusion {};
struct PrecStrict {
    std::reference_wrapper<const Partition> partition;
};
using MaximalityOrder = std::variant<SubsetInclusion, PrecStrict>;

/// Members not strictly dominated by another member under `order`.
/// For PrecStrict, members outside the focus raise NotWithinFocus.
ExtensionFamily filter_maximal(const ExtensionFamily& family, const MaximalityOrder& order);

/// All conflict-free subsets of `space`.
ExtensionFamily conflict_free_sets(const ArgumentationFramework& af, const ArgumentSet& space,
                                   const SearchBudget& budget = {});

/// All admissible subsets of `space`.
ExtensionFamily admissible_sets(const ArgumentationFramework& af, const ArgumentSet& space,
                                const SearchBudget& budget = {});

/// All restrictedly admissible subsets of the focus.
ExtensionFamily restrictedly_admissible_sets(const ArgumentationFramework& af, const Partition& p,
                                             const SearchBudget& budget = {});

ExtensionFamily preferred_extensions(const ArgumentationFramework& af, const SearchBudget& budget = {});

/// ⊆-maximal admissible subsets of x.
ExtensionFamily preferred_extensions_on(const ArgumentationFramework& af, const ArgumentSet& x,
                                        const SearchBudget& budget = {});

/// Members of `family` whose unrestricted part is ⊆-maximal among all
/// unrestricted parts in the family.
ExtensionFamily keep_maximal_unrestricted(const ExtensionFamily& family, const Partition& p);

/// Every e_u ∪ R' with R' ⊆ e_r, e_u ∪ R' admissible and R' ⊆-minimal.
/// Requires e admissible and e ⊆ F (PreconditionViolated otherwise).
ExtensionFamily minimize_restricted(const ArgumentationFramework& af, const Partition& p,
                                    const ArgumentSet& e, const SearchBudget& budget = {});

/// Min-def extensions by the two-step method: preferred extensions on F,
/// keep those with a maximal unrestricted part, minimise their restricted
/// parts, then keep the ≺*-maximal results.
ExtensionFamily min_def_extensions(const ArgumentationFramework& af, const Partition& p,
                                   const SearchBudget& budget = {});

bool credulous_accepted(const ExtensionFamily& family, ArgIndex a);
bool skeptical_accepted(const ExtensionFamily& family, ArgIndex a);

}  // namespace mindef
