#include "mindef/extensions.hpp"

#include <algorithm>

#include "mindef/errors.hpp"
#include "mindef/semantics.hpp"

namespace mindef {

ExtensionFamily::ExtensionFamily(const ArgumentationFramework& af, std::vector<ArgumentSet> members) {
    for (const auto& m : members) {
        if (m.framework() != af.id()) throw CrossFrameworkSet();
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<std::pair<std::vector<std::string>, ArgumentSet>> keyed;
    keyed.reserve(members.size());
    for (auto& m : members) keyed.emplace_back(af.sorted_names(m), std::move(m));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    members_.reserve(keyed.size());
    for (auto& [_, m] : keyed) members_.push_back(std::move(m));
}

bool ExtensionFamily::contains(const ArgumentSet& s) const {
    return std::find(members_.begin(), members_.end(), s) != members_.end();
}

ExtensionFamily ExtensionFamily::filtered(const std::function<bool(const ArgumentSet&)>& keep) const {
    ExtensionFamily out;
    std::copy_if(members_.begin(), members_.end(), std::back_inserter(out.members_), keep);
    return out;
}

namespace {

class Deadline {
public:
    explicit Deadline(const SearchBudget& budget) {
        if (budget.wall_clock) limit_ = std::chrono::steady_clock::now() + *budget.wall_clock;
    }

    void poll() {
        if (!limit_ || (++ticks_ & 0x3FF) != 0) return;
        if (std::chrono::steady_clock::now() > *limit_) {
            throw BudgetExceeded("wall-clock ceiling reached");
        }
    }

private:
    std::optional<std::chrono::steady_clock::time_point> limit_;
    std::uint64_t ticks_ = 0;
};

enum class SearchMode { ConflictFree, Admissible, Maximal };

/// Depth-first include/exclude search over the arguments of a search space.
/// Branching always picks the lowest undecided index.
///
/// Before branching, each node is propagated to a fixpoint:
///  - an undecided argument that is self-attacking or in conflict with the
///    included set is excluded;
///  - an undecided argument with an attacker that no remaining candidate can
///    counter is excluded (it can never be defended);
///  - in Maximal mode, an undecided argument the included set already defends
///    is included, since every admissible superset could be extended by it.
/// A node dies when an included argument can no longer be defended, or (in
/// Maximal mode) when the included set defends an excluded argument. Leaves
/// are checked for admissibility, so all of this only affects speed.
class SetSearch {
public:
    SetSearch(const ArgumentationFramework& af, const ArgumentSet& space, SearchMode mode,
              const SearchBudget& budget)
        : af_(af), space_(space), mode_(mode), deadline_(budget), self_attacking_(af.empty_set()) {
        for (auto a : space) {
            if (af.self_attacking(a)) self_attacking_.insert(a);
        }
    }

    std::vector<ArgumentSet> run() {
        visit(Node{af_.empty_set(), af_.empty_set(), af_.empty_set(), space_});
        return std::move(found_);
    }

private:
    struct Node {
        ArgumentSet included;
        ArgumentSet excluded;
        ArgumentSet incompatible;  // attacks or is attacked by an included argument
        ArgumentSet undecided;
    };

    void visit(Node node) {
        deadline_.poll();
        if (!propagate(node)) return;
        if (node.undecided.empty()) {
            if (mode_ == SearchMode::ConflictFree || is_admissible(af_, node.included)) {
                found_.push_back(std::move(node.included));
            }
            return;
        }
        const ArgIndex x = *node.undecided.begin();
        node.undecided.erase(x);

        Node with = node;
        include(with, x);
        visit(std::move(with));

        node.excluded.insert(x);
        visit(std::move(node));
    }

    void include(Node& node, ArgIndex x) const {
        node.included.insert(x);
        node.incompatible |= af_.attackers(x);
        node.incompatible |= af_.targets(x);
    }

    bool propagate(Node& node) const {
        for (bool changed = true; changed;) {
            changed = false;
            ArgumentSet blocked = (node.incompatible | self_attacking_) & node.undecided;
            if (!blocked.empty()) {
                node.undecided -= blocked;
                node.excluded |= blocked;
            }
            if (mode_ == SearchMode::ConflictFree) return true;

            const ArgumentSet available = node.included | node.undecided;
            if (!counterable(node.included, available)) return false;
            for (auto x : node.undecided) {
                if (!counterable_one(x, available)) {
                    node.undecided.erase(x);
                    node.excluded.insert(x);
                    changed = true;
                } else if (mode_ == SearchMode::Maximal && defends(af_, node.included, x)) {
                    node.undecided.erase(x);
                    include(node, x);
                    changed = true;
                }
            }
        }
        if (mode_ == SearchMode::Maximal) {
            for (auto e : node.excluded) {
                if (defends(af_, node.included, e)) return false;
            }
        }
        return true;
    }

    // Every attacker of x is attacked by some member of `available`.
    bool counterable_one(ArgIndex x, const ArgumentSet& available) const {
        for (auto b : af_.attackers(x)) {
            if (!af_.attackers(b).intersects(available)) return false;
        }
        return true;
    }

    bool counterable(const ArgumentSet& set, const ArgumentSet& available) const {
        for (auto a : set) {
            if (!counterable_one(a, available)) return false;
        }
        return true;
    }

    const ArgumentationFramework& af_;
    ArgumentSet space_;
    SearchMode mode_;
    Deadline deadline_;
    ArgumentSet self_attacking_;
    std::vector<ArgumentSet> found_;
};

void require_bound(const ArgumentationFramework& af, const ArgumentSet& s) {
    if (s.framework() != af.id()) throw CrossFrameworkSet();
}

}  // namespace

ExtensionFamily filter_maximal(const ExtensionFamily& family, const MaximalityOrder& order) {
    const auto& m = family.members();
    auto dominated = [&](const ArgumentSet& s, const ArgumentSet& other) {
        if (std::holds_alternative<SubsetInclusion>(order)) return s.is_strict_subset_of(other);
        const Partition& p = std::get<PrecStrict>(order).partition;
        return prec_compare(p, s, other) == PrecOrdering::StrictlyBetter;
    };
    if (const auto* prec_order = std::get_if<PrecStrict>(&order)) {
        for (const auto& s : m) {
            if (!s.is_subset_of(prec_order->partition.get().focus())) {
                throw NotWithinFocus("family member outside the focus set");
            }
        }
    }
    return family.filtered([&](const ArgumentSet& s) {
        return std::none_of(m.begin(), m.end(), [&](const ArgumentSet& other) { return dominated(s, other); });
    });
}

ExtensionFamily conflict_free_sets(const ArgumentationFramework& af, const ArgumentSet& space,
                                   const SearchBudget& budget) {
    require_bound(af, space);
    return ExtensionFamily(af, SetSearch(af, space, SearchMode::ConflictFree, budget).run());
}

ExtensionFamily admissible_sets(const ArgumentationFramework& af, const ArgumentSet& space,
                                const SearchBudget& budget) {
    require_bound(af, space);
    return ExtensionFamily(af, SetSearch(af, space, SearchMode::Admissible, budget).run());
}

ExtensionFamily restrictedly_admissible_sets(const ArgumentationFramework& af, const Partition& p,
                                             const SearchBudget& budget) {
    return admissible_sets(af, p.focus(), budget).filtered(
        [&](const ArgumentSet& s) { return is_restrictedly_admissible(af, p, s); });
}

ExtensionFamily preferred_extensions_on(const ArgumentationFramework& af, const ArgumentSet& x,
                                        const SearchBudget& budget) {
    require_bound(af, x);
    ExtensionFamily candidates(af, SetSearch(af, x, SearchMode::Maximal, budget).run());
    return filter_maximal(candidates, SubsetInclusion{});
}

ExtensionFamily preferred_extensions(const ArgumentationFramework& af, const SearchBudget& budget) {
    return preferred_extensions_on(af, af.full_set(), budget);
}

ExtensionFamily keep_maximal_unrestricted(const ExtensionFamily& family, const Partition& p) {
    const auto& m = family.members();
    return family.filtered([&](const ArgumentSet& s) {
        const ArgumentSet su = s & p.unrestricted();
        return std::none_of(m.begin(), m.end(), [&](const ArgumentSet& other) {
            return su.is_strict_subset_of(other & p.unrestricted());
        });
    });
}

ExtensionFamily minimize_restricted(const ArgumentationFramework& af, const Partition& p,
                                    const ArgumentSet& e, const SearchBudget& budget) {
    require_bound(af, e);
    if (!e.is_subset_of(p.focus())) throw PreconditionViolated("set is not contained in the focus set");
    if (!is_admissible(af, e)) throw PreconditionViolated("set is not admissible");

    const auto [base, er] = split(e, p);
    const std::vector<ArgIndex> order = er.members();
    Deadline deadline(budget);
    std::vector<ArgumentSet> found;

    // Include/exclude over e_r, exclusion first. A branch dies when even
    // keeping every undecided restricted argument cannot defend the current
    // set, or when its chosen part already contains a solution.
    auto search = [&](auto&& self, std::size_t pos, ArgumentSet& chosen, ArgumentSet& undecided) -> void {
        deadline.poll();
        const ArgumentSet current = base | chosen;
        const ArgumentSet widest = current | undecided;
        for (auto a : current) {
            if (!defends(af, widest, a)) return;
        }
        for (const auto& r : found) {
            if ((r & er).is_subset_of(chosen)) return;
        }
        if (pos == order.size()) {
            if (is_admissible(af, current)) found.push_back(current);
            return;
        }
        const ArgIndex x = order[pos];
        undecided.erase(x);
        self(self, pos + 1, chosen, undecided);
        chosen.insert(x);
        self(self, pos + 1, chosen, undecided);
        chosen.erase(x);
        undecided.insert(x);
    };
    ArgumentSet chosen = af.empty_set();
    ArgumentSet undecided = er;
    search(search, 0, chosen, undecided);

    ExtensionFamily candidates(af, std::move(found));
    const auto& m = candidates.members();
    return candidates.filtered([&](const ArgumentSet& s) {
        const ArgumentSet sr = s & p.restricted();
        return std::none_of(m.begin(), m.end(), [&](const ArgumentSet& other) {
            return (other & p.restricted()).is_strict_subset_of(sr);
        });
    });
}

ExtensionFamily min_def_extensions(const ArgumentationFramework& af, const Partition& p,
                                   const SearchBudget& budget) {
    if (p.framework() != af.id()) throw CrossFrameworkSet();
    const ExtensionFamily on_focus = preferred_extensions_on(af, p.focus(), budget);
    std::vector<ArgumentSet> candidates;
    for (const auto& x : keep_maximal_unrestricted(on_focus, p)) {
        for (const auto& s : minimize_restricted(af, p, x, budget)) candidates.push_back(s);
    }
    return filter_maximal(ExtensionFamily(af, std::move(candidates)), PrecStrict{p});
}

bool credulous_accepted(const ExtensionFamily& family, ArgIndex a) {
    if (family.empty()) throw EmptyFamily();
    return std::any_of(family.begin(), family.end(), [a](const ArgumentSet& s) { return s.contains(a); });
}

bool skeptical_accepted(const ExtensionFamily& family, ArgIndex a) {
    if (family.empty()) throw EmptyFamily();
    return std::all_of(family.begin(), family.end(), [a](const ArgumentSet& s) { return s.contains(a); });
}

}  // namespace mindef
