#include <doctest.h>

#include "mindef/errors.hpp"
#include "mindef/generators.hpp"
#include "mindef/oracle.hpp"
#include "mindef/semantics.hpp"
#include "support.hpp"

using namespace mindef;
using namespace mindef::oracle;
using mindef::test::Names;
using mindef::test::names_of;

TEST_CASE("oracle on the worked examples") {
    const auto af1 = reference_fixture("AF1").af;
    const auto adm = oracle_admissible(af1, af1.full_set());
    for (const auto& s : {af1.empty_set(), af1.make_set({"o1"}), af1.make_set({"o1", "u2", "u3"}),
                          af1.make_set({"o1", "u2", "u3", "u4", "u5", "r1", "r2", "r3", "o5"})}) {
        CHECK(adm.contains(s));
    }
    CHECK(names_of(af1, oracle_preferred(af1)) ==
          std::vector<Names>{{"o1", "o5", "r1", "r2", "r3", "u2", "u3", "u4", "u5"}});

    const auto af3 = reference_fixture("AF3");
    const auto adm_f = oracle_admissible(af3.af, af3.partition.focus());
    CHECK(adm_f.contains(af3.af.make_set({"u2", "u3", "u4", "u5", "r2"})));
    CHECK(adm_f.contains(af3.af.make_set({"u2", "u3", "u4", "u5", "r1", "r2"})));
    CHECK(names_of(af3.af, oracle_min_def(af3.af, af3.partition)) ==
          std::vector<Names>{{"r2", "u2", "u3", "u4", "u5"}});

    const auto abc = reference_fixture("ABC");
    CHECK(names_of(abc.af, oracle_preferred_on(abc.af, abc.af.make_set({"a"}))) == std::vector<Names>{{}});

    const std::vector<std::string> none;
    const auto empty = build_framework(none, {});
    CHECK(names_of(empty, oracle_admissible(empty, empty.full_set())) == std::vector<Names>{{}});
}

TEST_CASE("oracle refuses search spaces above the cap") {
    std::vector<std::string> names;
    for (int i = 0; i < 21; ++i) names.push_back("x" + std::to_string(i));
    const auto af = build_framework(names, {});
    CHECK_THROWS_AS(oracle_admissible(af, af.full_set()), BudgetExceeded);
    CHECK_THROWS_AS(oracle_preferred(af), BudgetExceeded);
    CHECK_THROWS_AS(oracle_min_def(af, Partition::vacuous(af)), BudgetExceeded);

    SearchBudget tight;
    tight.max_arguments_for_exhaustive = 3;
    CHECK_THROWS_AS(oracle_conflict_free(af, af.make_set({"x0", "x1", "x2", "x3"}), tight), BudgetExceeded);
    CHECK(oracle_conflict_free(af, af.make_set({"x0", "x1", "x2"}), tight).size() == 8);
}

TEST_CASE("oracle families are closed under their defining predicates") {
    for (std::size_t i = 0; i < 150; ++i) {
        const auto inst = random_instance(test::corpus_config(i, 11));
        const auto& af = inst.af;
        const auto& p = inst.partition;
        const auto adm = oracle_admissible(af, af.full_set());
        const auto cf = oracle_conflict_free(af, af.full_set());
        const auto ra = oracle_restrictedly_admissible(af, p);
        const auto pref = oracle_preferred(af);

        for (const auto& s : test::all_subsets(af, af.full_set())) {
            CHECK(cf.contains(s) == is_conflict_free(af, s));
            CHECK(adm.contains(s) == is_admissible(af, s));
            const bool maximal = is_admissible(af, s) &&
                                 std::none_of(adm.begin(), adm.end(), [&](const ArgumentSet& t) {
                                     return s.is_strict_subset_of(t);
                                 });
            CHECK(pref.contains(s) == maximal);
            if (s.is_subset_of(p.focus())) CHECK(ra.contains(s) == is_restrictedly_admissible(af, p, s));
        }
        CHECK(pref == filter_maximal(adm, SubsetInclusion{}));
    }
}
