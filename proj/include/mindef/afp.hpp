#pragma once

#include <string>
#include <string_view>

#include "mindef/framework.hpp"

namespace mindef {

/// A framework and its partition as read from an AFP file.
struct PartitionedFramework {
    ArgumentationFramework af;
    Partition partition;
};

/// Parses the AFP text format: one statement per line, each one of
///
///     arg(NAME).   att(NAME,NAME).   focus(NAME).   restricted(NAME).
///
/// with NAME in [A-Za-z0-9_]+. Whitespace may surround any token, `#` starts
/// a comment, blank lines are ignored and repeated statements are merged.
/// `restricted(x)` implies `focus(x)`; a file with neither yields F = A.
///
/// Throws ParseError for malformed lines and UndeclaredArgument (with the
/// line number) when att/focus/restricted names a missing argument.
PartitionedFramework parse_afp(std::string_view text);

/// Canonical text: a header comment, arg lines in index order, att lines
/// sorted by index pair, then focus lines for F_u and restricted lines for
/// F_r. Focus and restricted lines are left out for the vacuous partition.
std::string serialize_afp(const ArgumentationFramework& af, const Partition& p);

/// The partition a file round-trip preserves: an empty focus becomes F = A,
/// since the format cannot express it.
Partition canonical_partition(const ArgumentationFramework& af, const Partition& p);

}  // namespace mindef
