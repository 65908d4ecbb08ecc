#include <doctest.h>

#include "mindef/errors.hpp"
#include "mindef/extensions.hpp"
#include "mindef/generators.hpp"
#include "mindef/oracle.hpp"
#include "mindef/semantics.hpp"
#include "support.hpp"

using namespace mindef;
using mindef::test::Names;
using mindef::test::names_of;

namespace {

ArgumentationFramework framework(const std::vector<std::string>& names,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
    return build_framework(names, pairs);
}

const Names kAf1Preferred = {"o1", "o5", "r1", "r2", "r3", "u2", "u3", "u4", "u5"};

}  // namespace

TEST_CASE("ExtensionFamily is deduplicated and canonically ordered") {
    const auto af = framework({"b", "a", "c"}, {});
    ExtensionFamily f(af, {af.make_set({"c"}), af.make_set({"a", "b"}), af.empty_set(), af.make_set({"c"}),
                           af.make_set({"b"})});
    CHECK(names_of(af, f) == std::vector<Names>{{}, {"a", "b"}, {"b"}, {"c"}});

    const auto other = framework({"x"}, {});
    CHECK_THROWS_AS(ExtensionFamily(af, {other.empty_set()}), CrossFrameworkSet);
}

TEST_CASE("preferred extensions") {
    const auto af1 = reference_fixture("AF1").af;
    CHECK(names_of(af1, preferred_extensions(af1)) == std::vector<Names>{kAf1Preferred});

    const auto cyc = framework({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(names_of(cyc, preferred_extensions(cyc)) == std::vector<Names>{{"a"}, {"b"}});

    const auto empty = framework({}, {});
    CHECK(names_of(empty, preferred_extensions(empty)) == std::vector<Names>{{}});
}

TEST_CASE("preferred extensions on a set") {
    const auto af2 = reference_fixture("AF2");
    CHECK(names_of(af2.af, preferred_extensions_on(af2.af, af2.partition.focus())) ==
          std::vector<Names>{{"r1", "r2", "r3", "u2", "u3", "u4", "u5"}});

    const auto abc = reference_fixture("ABC");
    const auto x = abc.af.make_set({"a"});
    CHECK(names_of(abc.af, preferred_extensions_on(abc.af, x)) == std::vector<Names>{{}});

    // Not the intersection of X with the preferred extensions.
    const auto preferred = preferred_extensions(abc.af);
    CHECK(names_of(abc.af, preferred) == std::vector<Names>{{"a", "c"}});
    std::vector<ArgumentSet> cut;
    for (const auto& e : preferred) cut.push_back(e & x);
    CHECK(ExtensionFamily(abc.af, cut) != preferred_extensions_on(abc.af, x));
}

TEST_CASE("minimize_restricted") {
    const auto inst = reference_fixture("AF3");
    const auto& af = inst.af;
    const auto& p = inst.partition;
    const auto e = af.make_set({"u2", "u3", "u4", "u5", "r1", "r2", "r3"});
    CHECK(names_of(af, minimize_restricted(af, p, e)) == std::vector<Names>{{"r2", "u2", "u3", "u4", "u5"}});

    const auto plain = af.make_set({"u2", "u3", "u5"});
    CHECK(names_of(af, minimize_restricted(af, p, plain)) == std::vector<Names>{{"u2", "u3", "u5"}});

    CHECK_THROWS_AS(minimize_restricted(af, p, af.make_set({"u1"})), PreconditionViolated);
    CHECK_THROWS_AS(minimize_restricted(af, p, af.make_set({"o1"})), PreconditionViolated);
}

TEST_CASE("minimize_restricted output is admissible and restricted-minimal") {
    for (std::size_t i = 0; i < 200; ++i) {
        const auto inst = random_instance(test::corpus_config(i, 5));
        const auto& af = inst.af;
        const auto& p = inst.partition;
        for (const auto& e : oracle::oracle_admissible(af, p.focus())) {
            const auto result = minimize_restricted(af, p, e);
            REQUIRE_FALSE(result.empty());
            const auto eu = e & p.unrestricted();
            for (const auto& s : result) {
                CHECK((s & p.unrestricted()) == eu);
                CHECK((s & p.restricted()).is_subset_of(e & p.restricted()));
                CHECK(is_admissible(af, s));
                for (const auto& smaller : test::all_subsets(af, s & p.restricted())) {
                    if (smaller != (s & p.restricted())) CHECK_FALSE(is_admissible(af, eu | smaller));
                }
            }
            // Completeness: every admissible e_u ∪ R' has some output below it.
            for (const auto& r : test::all_subsets(af, e & p.restricted())) {
                if (!is_admissible(af, eu | r)) continue;
                bool covered = false;
                for (const auto& s : result) covered = covered || (s & p.restricted()).is_subset_of(r);
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("filter_maximal") {
    const auto af1 = reference_fixture("AF1").af;
    ExtensionFamily f(af1, {af1.empty_set(), af1.make_set({"o1"}), af1.make_set({"o1", "u2", "u3"})});
    CHECK(names_of(af1, filter_maximal(f, SubsetInclusion{})) == std::vector<Names>{{"o1", "u2", "u3"}});

    ExtensionFamily single(af1, {af1.make_set({"u1"})});
    CHECK(filter_maximal(single, SubsetInclusion{}) == single);

    const auto inst = reference_fixture("AF3");
    const auto& af = inst.af;
    ExtensionFamily pair(af, {af.make_set({"u2", "u3", "u4", "u5", "r2"}),
                              af.make_set({"u2", "u3", "u4", "u5", "r1", "r2"})});
    CHECK(names_of(af, filter_maximal(pair, PrecStrict{inst.partition})) ==
          std::vector<Names>{{"r2", "u2", "u3", "u4", "u5"}});

    ExtensionFamily outside(af, {af.make_set({"o1"})});
    CHECK_THROWS_AS(filter_maximal(outside, PrecStrict{inst.partition}), NotWithinFocus);
}

TEST_CASE("min-def extensions") {
    const auto inst = reference_fixture("AF3");
    CHECK(names_of(inst.af, min_def_extensions(inst.af, inst.partition)) ==
          std::vector<Names>{{"r2", "u2", "u3", "u4", "u5"}});

    const auto af2 = reference_fixture("AF2");
    CHECK(min_def_extensions(af2.af, af2.partition) == preferred_extensions_on(af2.af, af2.partition.focus()));
}

TEST_CASE("acceptance queries") {
    const auto af1 = reference_fixture("AF1").af;
    const auto pref = preferred_extensions(af1);
    CHECK(credulous_accepted(pref, af1.index_of("o1")));
    CHECK(skeptical_accepted(pref, af1.index_of("o1")));
    CHECK_FALSE(credulous_accepted(pref, af1.index_of("r4")));
    CHECK_FALSE(skeptical_accepted(pref, af1.index_of("r4")));

    const auto cyc = framework({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    const auto both = preferred_extensions(cyc);
    CHECK(credulous_accepted(both, cyc.index_of("a")));
    CHECK_FALSE(skeptical_accepted(both, cyc.index_of("a")));

    CHECK_THROWS_AS(credulous_accepted(ExtensionFamily{}, 0), EmptyFamily);
    CHECK_THROWS_AS(skeptical_accepted(ExtensionFamily{}, 0), EmptyFamily);
}

TEST_CASE("wall-clock ceiling aborts instead of truncating") {
    std::vector<std::string> names;
    for (int i = 0; i < 40; ++i) names.push_back("x" + std::to_string(i));
    const auto af = framework(names, {});
    SearchBudget budget;
    budget.wall_clock = std::chrono::milliseconds(20);
    CHECK_THROWS_AS(conflict_free_sets(af, af.full_set(), budget), BudgetExceeded);
}

TEST_CASE("solver families match the oracle on random instances") {
    for (std::size_t i = 0; i < 200; ++i) {
        const auto inst = random_instance(test::corpus_config(i, 7));
        const auto& af = inst.af;
        const auto& p = inst.partition;
        CAPTURE(i);
        CHECK(conflict_free_sets(af, af.full_set()) == oracle::oracle_conflict_free(af, af.full_set()));
        CHECK(admissible_sets(af, af.full_set()) == oracle::oracle_admissible(af, af.full_set()));
        CHECK(admissible_sets(af, p.focus()) == oracle::oracle_admissible(af, p.focus()));
        CHECK(preferred_extensions(af) == oracle::oracle_preferred(af));
        CHECK(preferred_extensions_on(af, p.focus()) == oracle::oracle_preferred_on(af, p.focus()));
        CHECK(restrictedly_admissible_sets(af, p) == oracle::oracle_restrictedly_admissible(af, p));
        CHECK(min_def_extensions(af, p) == oracle::oracle_min_def(af, p));
        CHECK(preferred_extensions_on(af, af.full_set()) == preferred_extensions(af));
    }
}

TEST_CASE("type-1 partitions: min-def equals preferred on F") {
    for (std::size_t i = 0; i < 100; ++i) {
        auto cfg = test::corpus_config(i, 8);
        cfg.restricted_fraction = 0.0;
        const auto inst = random_instance(cfg);
        CHECK(min_def_extensions(inst.af, inst.partition) ==
              preferred_extensions_on(inst.af, inst.partition.focus()));
    }
}

TEST_CASE("properties of preferred and min-def extensions") {
    for (std::size_t i = 0; i < 200; ++i) {
        const auto inst = random_instance(test::corpus_config(i, 9));
        const auto& af = inst.af;
        const auto& p = inst.partition;
        CAPTURE(i);
        const auto pref = preferred_extensions(af);
        const auto pref_f = preferred_extensions_on(af, p.focus());
        const auto mindef = min_def_extensions(af, p);
        const auto adm = oracle::oracle_admissible(af, af.full_set());

        REQUIRE_FALSE(pref.empty());
        REQUIRE_FALSE(pref_f.empty());
        REQUIRE_FALSE(mindef.empty());
        if (is_well_founded(af)) CHECK(pref.size() == 1);
        if (is_well_founded_on(af, p.focus())) CHECK(pref_f.size() == 1);

        auto contained_in_some = [](const ArgumentSet& s, const ExtensionFamily& f) {
            return std::any_of(f.begin(), f.end(), [&](const ArgumentSet& e) { return s.is_subset_of(e); });
        };
        for (const auto& s : adm) {
            CHECK(contained_in_some(s, pref));
            if (s.is_subset_of(p.focus())) {
                CHECK(contained_in_some(s, pref_f));
                CHECK(std::any_of(mindef.begin(), mindef.end(), [&](const ArgumentSet& m) { return prec(p, s, m); }));
            }
        }
        for (const auto& e : pref_f) CHECK(contained_in_some(e, pref));

        // ≺*-maximal admissible subsets of F coincide with min-def.
        CHECK(filter_maximal(oracle::oracle_admissible(af, p.focus()), PrecStrict{p}) == mindef);

        for (const auto& s : mindef) {
            CHECK(std::any_of(pref_f.begin(), pref_f.end(), [&](const ArgumentSet& e) {
                return (e & p.unrestricted()) == (s & p.unrestricted()) &&
                       (s & p.restricted()).is_subset_of(e & p.restricted());
            }));
        }
        for (const auto& e : pref_f) {
            CHECK(std::any_of(mindef.begin(), mindef.end(), [&](const ArgumentSet& s) {
                return (e & p.unrestricted()).is_subset_of(s & p.unrestricted());
            }));
        }
    }
}
