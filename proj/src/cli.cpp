#include "mindef/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mindef/afp.hpp"
#include "mindef/errors.hpp"
#include "mindef/generators.hpp"
#include "mindef/oracle.hpp"
#include "mindef/semantics.hpp"

namespace mindef::cli {

namespace {

constexpr std::array<std::pair<Semantics, std::string_view>, 6> kSemanticsNames{{
    {Semantics::ConflictFree, "conflict-free"},
    {Semantics::Admissible, "admissible"},
    {Semantics::Preferred, "preferred"},
    {Semantics::PreferredOnF, "preferred-on-f"},
    {Semantics::RestrictedAdmissible, "restricted-admissible"},
    {Semantics::MinDef, "min-def"},
}};

ExtensionFamily compute_family(const ArgumentationFramework& af, const Partition& p, const ArgumentSet& x,
                               const SolveRequest& r) {
    const SearchBudget& b = r.budget;
    if (r.engine == Engine::Oracle) {
        switch (r.semantics) {
            case Semantics::ConflictFree: return oracle::oracle_conflict_free(af, af.full_set(), b);
            case Semantics::Admissible: return oracle::oracle_admissible(af, af.full_set(), b);
            case Semantics::Preferred: return oracle::oracle_preferred(af, b);
            case Semantics::PreferredOnF: return oracle::oracle_preferred_on(af, x, b);
            case Semantics::RestrictedAdmissible: return oracle::oracle_restrictedly_admissible(af, p, b);
            case Semantics::MinDef: return oracle::oracle_min_def(af, p, b);
        }
    }
    switch (r.semantics) {
        case Semantics::ConflictFree: return conflict_free_sets(af, af.full_set(), b);
        case Semantics::Admissible: return admissible_sets(af, af.full_set(), b);
        case Semantics::Preferred: return preferred_extensions(af, b);
        case Semantics::PreferredOnF: return preferred_extensions_on(af, x, b);
        case Semantics::RestrictedAdmissible: return restrictedly_admissible_sets(af, p, b);
        case Semantics::MinDef: return min_def_extensions(af, p, b);
    }
    throw std::logic_error("unhandled semantics");
}

// Pointwise predicates the solver engine answers without enumerating.
std::optional<bool> direct_check(const ArgumentationFramework& af, const Partition& p, const ArgumentSet& s,
                                 Semantics sem) {
    switch (sem) {
        case Semantics::ConflictFree: return is_conflict_free(af, s);
        case Semantics::Admissible: return is_admissible(af, s);
        case Semantics::RestrictedAdmissible: return is_restrictedly_admissible(af, p, s);
        default: return std::nullopt;
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = item.find_last_not_of(" \t");
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

std::string braces(const std::vector<std::string>& names) {
    std::string line = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) line += ',';
        line += names[i];
    }
    return line + "}";
}

}  // namespace

std::string_view to_string(Semantics s) {
    for (auto [sem, name] : kSemanticsNames) {
        if (sem == s) return name;
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
    for (auto [sem, name] : kSemanticsNames) {
        if (name == text) return sem;
    }
    return std::nullopt;
}

SolveResult solve(const ArgumentationFramework& af, const Partition& p, const SolveRequest& request) {
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.stats = {af.size(), af.attack_count(), p.focus().size(), p.unrestricted().size(),
                    p.restricted().size()};
    const ArgumentSet x = request.on ? af.make_set(*request.on) : p.focus();

    std::visit(
        [&](const auto& q) {
            using Q = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<Q, Enumerate>) {
                result.family = compute_family(af, p, x, request);
            } else if constexpr (std::is_same_v<Q, Credulous>) {
                const ArgIndex a = af.index_of(q.argument);
                result.family = compute_family(af, p, x, request);
                result.verdict = credulous_accepted(*result.family, a);
            } else if constexpr (std::is_same_v<Q, Skeptical>) {
                const ArgIndex a = af.index_of(q.argument);
                result.family = compute_family(af, p, x, request);
                result.verdict = skeptical_accepted(*result.family, a);
            } else {
                const ArgumentSet s = af.make_set(q.arguments);
                if (request.semantics == Semantics::RestrictedAdmissible && !s.is_subset_of(p.focus())) {
                    throw NotWithinFocus("checked set is not contained in the focus set");
                }
                if (request.engine == Engine::Solver) result.verdict = direct_check(af, p, s, request.semantics);
                if (!result.verdict) {
                    result.family = compute_family(af, p, x, request);
                    result.verdict = result.family->contains(s);
                }
            }
        },
        request.query);

    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

std::string render(const ArgumentationFramework& af, const SolveRequest& request, const SolveResult& result) {
    if (request.format == OutputFormat::Plain) {
        if (result.verdict) return *result.verdict ? "YES\n" : "NO\n";
        std::string out;
        for (const auto& s : *result.family) out += braces(af.sorted_names(s)) + "\n";
        return out;
    }
    nlohmann::json doc;
    doc["semantics"] = to_string(request.semantics);
    doc["extensions"] = nlohmann::json::array();
    if (result.family) {
        for (const auto& s : *result.family) doc["extensions"].push_back(af.sorted_names(s));
    }
    doc["stats"] = {{"arguments", result.stats.arguments},
                    {"attacks", result.stats.attacks},
                    {"focus", result.stats.focus},
                    {"unrestricted", result.stats.unrestricted},
                    {"restricted", result.stats.restricted}};
    if (result.verdict) doc["verdict"] = *result.verdict;
    return doc.dump(2) + "\n";
}

int run_cli(const SolveRequest& request, std::istream& in, std::ostream& out, std::ostream& err, bool verbose) {
    try {
        std::string text;
        if (request.input == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream file(request.input, std::ios::binary);
            if (!file) {
                err << "error: cannot open '" << request.input << "'\n";
                return kExitInputError;
            }
            text.assign(std::istreambuf_iterator<char>(file), {});
        }
        const PartitionedFramework instance = parse_afp(text);
        const SolveResult result = solve(instance.af, instance.partition, request);
        out << render(instance.af, request, result);
        if (verbose) {
            err << "arguments=" << result.stats.arguments << " attacks=" << result.stats.attacks
                << " focus=" << result.stats.focus << " unrestricted=" << result.stats.unrestricted
                << " restricted=" << result.stats.restricted << " elapsed_us=" << result.elapsed.count() << "\n";
        }
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int run_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solver for argumentation frameworks with restricted arguments (min-def semantics)", "mindef"};
    app.require_subcommand(1);

    std::vector<std::string> semantics_names;
    for (auto [_, name] : kSemanticsNames) semantics_names.emplace_back(name);

    SolveRequest request;
    std::string semantics = "preferred";
    std::string format = "plain";
    std::string engine = "solver";
    std::string on, credulous, skeptical, check_set;
    long timeout_ms = 0;
    bool verbose = false;

    auto add_common = [&](CLI::App* cmd, bool with_engine) {
        cmd->add_option("input", request.input, "AFP file, or - for standard input");
        cmd->add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));
        if (with_engine) {
            cmd->add_option("-e,--engine", engine, "solver or brute-force oracle")
                ->check(CLI::IsMember({"solver", "oracle"}));
        }
        cmd->add_option("--on", on, "Comma-separated X for preferred-on-f (default: the focus set)");
        cmd->add_option("--timeout-ms", timeout_ms, "Wall-clock ceiling in milliseconds")->check(CLI::NonNegativeNumber);
        cmd->add_option("--max-exhaustive", request.budget.max_arguments_for_exhaustive,
                        "Largest search space the oracle accepts");
        cmd->add_flag("-v,--verbose", verbose, "Print instance statistics and timing to stderr");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Enumerate extensions or answer an acceptance query");
    auto* oracle_cmd = app.add_subcommand("oracle", "Like solve, using the brute-force oracle");
    for (auto* cmd : {solve_cmd, oracle_cmd}) {
        add_common(cmd, cmd == solve_cmd);
        cmd->add_option("-s,--semantics", semantics, "Semantics")->check(CLI::IsMember(semantics_names));
        auto* c = cmd->add_option("--credulous", credulous, "Is the argument in some extension?");
        auto* k = cmd->add_option("--skeptical", skeptical, "Is the argument in every extension?");
        auto* s = cmd->add_option("--check", check_set, "Is the comma-separated set an extension?");
        c->excludes(k)->excludes(s);
        k->excludes(s);
    }

    auto* check_cmd = app.add_subcommand("check", "Test whether a set has a property");
    add_common(check_cmd, true);
    check_cmd->add_option("--set", check_set, "Comma-separated argument names")->required();
    check_cmd->add_option("-p,--property", semantics, "Property")->required()->check(CLI::IsMember(semantics_names));

    GeneratorConfig gen;
    std::string gen_output;
    auto* gen_cmd = app.add_subcommand("generate", "Emit a seeded random instance in AFP format");
    gen_cmd->add_option("-n,--arguments", gen.argument_count, "Number of arguments")->required();
    gen_cmd->add_option("-p,--probability", gen.attack_probability, "Attack probability per ordered pair");
    gen_cmd->add_option("--focus", gen.focus_fraction, "Fraction of arguments in the focus set");
    gen_cmd->add_option("--restricted", gen.restricted_fraction, "Fraction of the focus that is restricted");
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_flag("--acyclic", gen.acyclic_only, "Only generate acyclic attack graphs");
    gen_cmd->add_option("-o,--output", gen_output, "Write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (gen_cmd->parsed()) {
        try {
            const std::string text = [&] {
                Instance inst = random_instance(gen);
                return serialize_afp(inst.af, inst.partition);
            }();
            if (gen_output.empty()) {
                out << text;
            } else {
                std::ofstream file(gen_output, std::ios::binary);
                if (!(file << text)) {
                    err << "error: cannot write '" << gen_output << "'\n";
                    return kExitInputError;
                }
            }
            return kExitOk;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitInputError;
        }
    }

    request.semantics = *parse_semantics(semantics);
    request.format = format == "json" ? OutputFormat::Structured : OutputFormat::Plain;
    request.engine = engine == "oracle" || oracle_cmd->parsed() ? Engine::Oracle : Engine::Solver;
    if (timeout_ms > 0) request.budget.wall_clock = std::chrono::milliseconds(timeout_ms);
    if (!on.empty()) request.on = split_list(on);
    if (check_cmd->parsed()) {
        request.query = Check{split_list(check_set)};
    } else if (!credulous.empty()) {
        request.query = Credulous{credulous};
    } else if (!skeptical.empty()) {
        request.query = Skeptical{skeptical};
    } else if ((solve_cmd->parsed() && solve_cmd->count("--check")) ||
               (oracle_cmd->parsed() && oracle_cmd->count("--check"))) {
        request.query = Check{split_list(check_set)};
    }
    return run_cli(request, in, out, err, verbose);
}

}  // namespace mindef::cli
