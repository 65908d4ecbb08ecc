#include "mindef/semantics.hpp"

#include <vector>

#include "mindef/errors.hpp"

namespace mindef {

namespace {

void require_bound(const ArgumentationFramework& af, const ArgumentSet& s) {
    if (s.framework() != af.id()) throw CrossFrameworkSet();
}

void require_in_focus(const Partition& p, const ArgumentSet& s) {
    if (!s.is_subset_of(p.focus())) throw NotWithinFocus("set is not contained in the focus set");
}

}  // namespace

bool is_conflict_free(const ArgumentationFramework& af, const ArgumentSet& s) {
    require_bound(af, s);
    for (auto a : s) {
        if (af.targets(a).intersects(s)) return false;
    }
    return true;
}

bool defends(const ArgumentationFramework& af, const ArgumentSet& s, ArgIndex a) {
    require_bound(af, s);
    for (auto b : af.attackers(a)) {
        if (!af.attackers(b).intersects(s)) return false;
    }
    return true;
}

bool defends_all(const ArgumentationFramework& af, const ArgumentSet& s) {
    for (auto a : s) {
        if (!defends(af, s, a)) return false;
    }
    return true;
}

bool is_admissible(const ArgumentationFramework& af, const ArgumentSet& s) {
    return is_conflict_free(af, s) && defends_all(af, s);
}

ArgumentSet individual_defenders(const ArgumentationFramework& af, ArgIndex a) {
    const std::size_t n = af.size();
    if (a >= n) throw std::out_of_range("argument index outside framework");
    // reached[parity][v]: v is the endpoint of a nonempty backward walk from a
    // whose length has the given parity.
    std::vector<bool> reached[2] = {std::vector<bool>(n, false), std::vector<bool>(n, false)};
    std::vector<std::pair<ArgIndex, int>> stack;
    for (auto b : af.attackers(a)) {
        if (!reached[1][b]) {
            reached[1][b] = true;
            stack.emplace_back(b, 1);
        }
    }
    while (!stack.empty()) {
        auto [v, parity] = stack.back();
        stack.pop_back();
        const int next = 1 - parity;
        for (auto b : af.attackers(v)) {
            if (!reached[next][b]) {
                reached[next][b] = true;
                stack.emplace_back(b, next);
            }
        }
    }
    ArgumentSet out = af.empty_set();
    for (ArgIndex v = 0; v < n; ++v) {
        if (reached[0][v]) out.insert(v);
    }
    return out;
}

bool is_restrictedly_admissible(const ArgumentationFramework& af, const Partition& p,
                                const ArgumentSet& s) {
    require_bound(af, s);
    require_in_focus(p, s);
    if (!is_admissible(af, s)) return false;
    auto [su, sr] = split(s, p);
    if (sr.empty()) return true;
    ArgumentSet justified = af.empty_set();
    for (auto y : su) justified |= individual_defenders(af, y);
    return sr.is_subset_of(justified);
}

bool prec(const Partition& p, const ArgumentSet& s1, const ArgumentSet& s2) {
    require_in_focus(p, s1);
    require_in_focus(p, s2);
    auto [u1, r1] = split(s1, p);
    auto [u2, r2] = split(s2, p);
    return u1.is_strict_subset_of(u2) || (u1 == u2 && r2.is_subset_of(r1));
}

PrecOrdering prec_compare(const Partition& p, const ArgumentSet& s1, const ArgumentSet& s2) {
    const bool forward = prec(p, s1, s2);
    const bool backward = prec(p, s2, s1);
    if (forward && backward) return PrecOrdering::Equivalent;
    if (forward) return PrecOrdering::StrictlyBetter;
    if (backward) return PrecOrdering::StrictlyWorse;
    return PrecOrdering::Incomparable;
}

}  // namespace mindef
