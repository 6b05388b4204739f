#ifndef NESTQUAD_CLI_HPP
#define NESTQUAD_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nestquad/moments.hpp"
#include "nestquad/rule_document.hpp"

namespace nestquad::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    ok = 0,
    usage_error = 1,      ///< bad flags or malformed input
    chain_stopped = 2,    ///< an extension failed; partial output written
    verify_failed = 3,    ///< a stored rule failed re-verification
};

struct VerifyReport {
    bool passed = true;
    std::string failed_check;  ///< name of the first failing invariant
    std::string detail;
    std::vector<std::string> lines;  ///< one line per check performed
};

/// Moments used to (re)build a document: the named distribution, the inline
/// custom moments, or `override_moments` when given.
MomentSequence document_moments(const RuleDocument& doc, const std::optional<MomentSequence>& override_moments = {});

/// Re-derives every stored quantity from the node polynomials and moments.
VerifyReport verify_document(const RuleDocument& doc, const MomentSequence& mu);

/// Entry point; `args` excludes the program name. Documents and reports go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nestquad::cli

#endif
