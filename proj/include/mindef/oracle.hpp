#pragma once

#include "mindef/extensions.hpp"
#include "mindef/framework.hpp"

// Brute-force reference semantics. Every function scans all 2^k subsets of
// its search space (k <= budget.max_arguments_for_exhaustive, else
// BudgetExceeded) and evaluates the definitions literally on bit masks. It
// shares no code with the solver beyond the framework and family types.
namespace mindef::oracle {

ExtensionFamily oracle_conflict_free(const ArgumentationFramework& af, const ArgumentSet& restrict_to,
                                     const SearchBudget& budget = {});

ExtensionFamily oracle_admissible(const ArgumentationFramework& af, const ArgumentSet& restrict_to,
                                  const SearchBudget& budget = {});

ExtensionFamily oracle_preferred(const ArgumentationFramework& af, const SearchBudget& budget = {});

ExtensionFamily oracle_preferred_on(const ArgumentationFramework& af, const ArgumentSet& x,
                                    const SearchBudget& budget = {});

ExtensionFamily oracle_restrictedly_admissible(const ArgumentationFramework& af, const Partition& p,
                                               const SearchBudget& budget = {});

ExtensionFamily oracle_min_def(const ArgumentationFramework& af, const Partition& p,
                               const SearchBudget& budget = {});

/// Individual defenders by stepping the set of walk endpoints one attack at a
/// time, up to walk length 2n.
ArgumentSet oracle_individual_defenders(const ArgumentationFramework& af, ArgIndex a);

}  // namespace mindef::oracle
