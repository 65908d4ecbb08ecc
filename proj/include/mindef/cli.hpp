#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mindef/extensions.hpp"
#include "mindef/framework.hpp"

namespace mindef::cli {

enum class Semantics { ConflictFree, Admissible, Preferred, PreferredOnF, RestrictedAdmissible, MinDef };
enum class OutputFormat { Plain, Structured };
enum class Engine { Solver, Oracle };

std::string_view to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view text);

struct Enumerate {};
struct Credulous {
    std::string argument;
};
struct Skeptical {
    std::string argument;
};
struct Check {
    std::vector<std::string> arguments;
};
using Query = std::variant<Enumerate, Credulous, Skeptical, Check>;

struct SolveRequest {
    std::string input = "-";  // file path, or "-" for standard input
    Semantics semantics = Semantics::Preferred;
    Query query = Enumerate{};
    OutputFormat format = OutputFormat::Plain;
    Engine engine = Engine::Solver;
    SearchBudget budget;
    /// X for preferred-on-f; the file's focus set when absent.
    std::optional<std::vector<std::string>> on;
};

struct InstanceStats {
    std::size_t arguments = 0;
    std::size_t attacks = 0;
    std::size_t focus = 0;
    std::size_t unrestricted = 0;
    std::size_t restricted = 0;
};

struct SolveResult {
    /// Family the answer was read from; empty for direct predicate checks.
    std::optional<ExtensionFamily> family;
    std::optional<bool> verdict;
    std::chrono::microseconds elapsed{0};
    InstanceStats stats;
};

/// Runs a request against an already-loaded instance.
SolveResult solve(const ArgumentationFramework& af, const Partition& p, const SolveRequest& request);

/// Renders a result; plain output is one `{a,b}` line per extension or a
/// single YES/NO line, structured output is one JSON document.
std::string render(const ArgumentationFramework& af, const SolveRequest& request, const SolveResult& result);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;

/// Loads the request's input (reading `in` for "-"), solves, writes the
/// rendering to `out` and returns the exit code. Errors go to `err`.
int run_cli(const SolveRequest& request, std::istream& in, std::ostream& out, std::ostream& err,
            bool verbose = false);

/// Full command line entry point (argv without the program name).
int run_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mindef::cli
