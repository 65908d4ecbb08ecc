#include "mindef/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "mindef/errors.hpp"

namespace mindef::oracle {

namespace {

using Mask = std::uint32_t;

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Search space re-indexed to bit positions 0..k-1.
class Space {
public:
    Space(const ArgumentationFramework& af, const ArgumentSet& space, const SearchBudget& budget)
        : af_(af), members_(space.members()) {
        if (space.framework() != af.id()) throw CrossFrameworkSet();
        if (members_.size() > budget.max_arguments_for_exhaustive || members_.size() >= 32) {
            throw BudgetExceeded("exhaustive search over " + std::to_string(members_.size()) +
                                 " arguments exceeds the cap of " +
                                 std::to_string(budget.max_arguments_for_exhaustive));
        }
        std::vector<int> position(af.size(), -1);
        for (std::size_t i = 0; i < members_.size(); ++i) position[members_[i]] = static_cast<int>(i);

        hits_.assign(members_.size(), 0);
        attackers_of_.assign(members_.size(), {});
        countered_by_.assign(af.size(), 0);
        for (auto [from, to] : af.attacks()) {
            if (position[from] >= 0) {
                countered_by_[to] |= Mask{1} << position[from];
                if (position[to] >= 0) hits_[position[from]] |= Mask{1} << position[to];
            }
            if (position[to] >= 0) attackers_of_[position[to]].push_back(from);
        }
    }

    std::size_t size() const { return members_.size(); }
    Mask all() const { return size() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << size()) - 1); }

    Mask mask_of(const ArgumentSet& s) const {
        Mask m = 0;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (s.contains(members_[i])) m |= Mask{1} << i;
        }
        return m;
    }

    ArgumentSet set_of(Mask m) const {
        ArgumentSet s = af_.empty_set();
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (m >> i & 1U) s.insert(members_[i]);
        }
        return s;
    }

    ArgIndex member(std::size_t i) const { return members_[i]; }

    bool conflict_free(Mask s) const {
        for (std::size_t i = 0; i < size(); ++i) {
            if ((s >> i & 1U) && (hits_[i] & s)) return false;
        }
        return true;
    }

    // Every attacker b of member i is attacked by something in s.
    bool defends(Mask s, std::size_t i) const {
        for (auto b : attackers_of_[i]) {
            if ((countered_by_[b] & s) == 0) return false;
        }
        return true;
    }

    bool admissible(Mask s) const {
        if (!conflict_free(s)) return false;
        for (std::size_t i = 0; i < size(); ++i) {
            if ((s >> i & 1U) && !defends(s, i)) return false;
        }
        return true;
    }

    ExtensionFamily family(const std::vector<Mask>& masks) const {
        std::vector<ArgumentSet> sets;
        sets.reserve(masks.size());
        for (auto m : masks) sets.push_back(set_of(m));
        return ExtensionFamily(af_, std::move(sets));
    }

private:
    const ArgumentationFramework& af_;
    std::vector<ArgIndex> members_;
    std::vector<Mask> hits_;                         // members attacked by member i
    std::vector<std::vector<ArgIndex>> attackers_of_;  // attackers (anywhere in A) of member i
    std::vector<Mask> countered_by_;                 // members attacking argument b
};

std::vector<Mask> all_admissible(const Space& space) {
    std::vector<Mask> out;
    for (std::uint64_t m = 0; m <= space.all(); ++m) {
        if (space.admissible(static_cast<Mask>(m))) out.push_back(static_cast<Mask>(m));
    }
    return out;
}

}  // namespace

ArgumentSet oracle_individual_defenders(const ArgumentationFramework& af, ArgIndex a) {
    const std::size_t n = af.size();
    ArgumentSet frontier = af.empty_set();
    frontier.insert(a);
    ArgumentSet result = af.empty_set();
    for (std::size_t length = 1; length <= 2 * n; ++length) {
        ArgumentSet next = af.empty_set();
        for (auto v : frontier) next |= af.attackers(v);
        frontier = next;
        if (length % 2 == 0) result |= frontier;
    }
    return result;
}

ExtensionFamily oracle_conflict_free(const ArgumentationFramework& af, const ArgumentSet& restrict_to,
                                     const SearchBudget& budget) {
    Space space(af, restrict_to, budget);
    std::vector<Mask> out;
    for (std::uint64_t m = 0; m <= space.all(); ++m) {
        if (space.conflict_free(static_cast<Mask>(m))) out.push_back(static_cast<Mask>(m));
    }
    return space.family(out);
}

ExtensionFamily oracle_admissible(const ArgumentationFramework& af, const ArgumentSet& restrict_to,
                                  const SearchBudget& budget) {
    Space space(af, restrict_to, budget);
    return space.family(all_admissible(space));
}

ExtensionFamily oracle_preferred_on(const ArgumentationFramework& af, const ArgumentSet& x,
                                    const SearchBudget& budget) {
    Space space(af, x, budget);
    std::vector<bool> admissible(std::size_t{1} << space.size(), false);
    for (auto m : all_admissible(space)) admissible[m] = true;

    // S is kept iff no nonempty Y ⊆ X \ S makes Y ∪ S admissible.
    std::vector<Mask> out;
    for (std::uint64_t s = 0; s <= space.all(); ++s) {
        if (!admissible[s]) continue;
        const Mask rest = space.all() & ~static_cast<Mask>(s);
        bool extendable = false;
        for (Mask y = rest; y != 0 && !extendable; y = (y - 1) & rest) {
            extendable = admissible[s | y];
        }
        if (!extendable) out.push_back(static_cast<Mask>(s));
    }
    return space.family(out);
}

ExtensionFamily oracle_preferred(const ArgumentationFramework& af, const SearchBudget& budget) {
    return oracle_preferred_on(af, af.full_set(), budget);
}

namespace {

struct TypedSpace {
    Space space;
    Mask unrestricted = 0;
    Mask restricted = 0;
};

TypedSpace partitioned_space(const ArgumentationFramework& af, const Partition& p, const SearchBudget& budget) {
    if (p.framework() != af.id()) throw CrossFrameworkSet();
    TypedSpace t{Space(af, p.focus(), budget)};
    t.unrestricted = t.space.mask_of(p.unrestricted());
    t.restricted = t.space.mask_of(p.restricted());
    return t;
}

std::vector<Mask> restrictedly_admissible_masks(const ArgumentationFramework& af, const TypedSpace& t) {
    const Space& space = t.space;
    // defender_of[i]: members of F that individually defend member i.
    std::vector<Mask> defender_of(space.size(), 0);
    for (std::size_t i = 0; i < space.size(); ++i) {
        defender_of[i] = space.mask_of(oracle_individual_defenders(af, space.member(i)));
    }
    std::vector<Mask> out;
    for (Mask s : all_admissible(space)) {
        Mask justified = 0;
        for (std::size_t i = 0; i < space.size(); ++i) {
            if ((s & t.unrestricted) >> i & 1U) justified |= defender_of[i];
        }
        if (subset(s & t.restricted, justified)) out.push_back(s);
    }
    return out;
}

}  // namespace

ExtensionFamily oracle_restrictedly_admissible(const ArgumentationFramework& af, const Partition& p,
                                               const SearchBudget& budget) {
    TypedSpace t = partitioned_space(af, p, budget);
    return t.space.family(restrictedly_admissible_masks(af, t));
}

ExtensionFamily oracle_min_def(const ArgumentationFramework& af, const Partition& p,
                               const SearchBudget& budget) {
    TypedSpace t = partitioned_space(af, p, budget);
    const auto candidates = restrictedly_admissible_masks(af, t);
    // s1 ≺ s2 as written: s1_u ⊂ s2_u, or s1_u = s2_u and s2_r ⊆ s1_r.
    auto prec = [&](Mask s1, Mask s2) {
        const Mask u1 = s1 & t.unrestricted, u2 = s2 & t.unrestricted;
        const Mask r1 = s1 & t.restricted, r2 = s2 & t.restricted;
        return (subset(u1, u2) && u1 != u2) || (u1 == u2 && subset(r2, r1));
    };
    std::vector<Mask> out;
    for (Mask s : candidates) {
        bool beaten = false;
        for (Mask other : candidates) {
            if (prec(s, other) && !prec(other, s)) {
                beaten = true;
                break;
            }
        }
        if (!beaten) out.push_back(s);
    }
    return t.space.family(out);
}

}  // namespace mindef::oracle
