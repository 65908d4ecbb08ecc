#pragma once

#include "mindef/framework.hpp"

namespace mindef {

bool is_conflict_free(const ArgumentationFramework& af, const ArgumentSet& s);

/// s defends a: every attacker of a is attacked by some member of s.
bool defends(const ArgumentationFramework& af, const ArgumentSet& s, ArgIndex a);

/// s defends each of its own members.
bool defends_all(const ArgumentationFramework& af, const ArgumentSet& s);

bool is_admissible(const ArgumentationFramework& af, const ArgumentSet& s);

/// All c with an even-length (>= 2) backward attack walk a = x0 <- x1 <- ... <- x2n = c.
///
/// Walks may revisit vertices and pass through any argument, so this is
/// reachability over (argument, parity) states. `a` itself is included when
/// an even walk returns to it.
ArgumentSet individual_defenders(const ArgumentationFramework& af, ArgIndex a);

/// Admissible, and every restricted member individually defends some
/// unrestricted member. Throws NotWithinFocus unless s ⊆ F.
bool is_restrictedly_admissible(const ArgumentationFramework& af, const Partition& p,
                                const ArgumentSet& s);

/// Verdict of the second set relative to the first.
enum class PrecOrdering { StrictlyBetter, Equivalent, StrictlyWorse, Incomparable };

/// Non-strict ≺: s1 ≺ s2 iff s1_u ⊂ s2_u, or s1_u = s2_u and s2_r ⊆ s1_r.
/// Throws NotWithinFocus unless both sets lie in F.
bool prec(const Partition& p, const ArgumentSet& s1, const ArgumentSet& s2);

/// Compares s2 against s1 under ≺ in both directions. StrictlyBetter means
/// s1 ≺ s2 and not s2 ≺ s1.
PrecOrdering prec_compare(const Partition& p, const ArgumentSet& s1, const ArgumentSet& s2);

}  // namespace mindef
