#ifndef POLARTREE_SESSION_HPP
#define POLARTREE_SESSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "polartree/pipeline.hpp"

namespace polartree {

/// Explicit roots of f and g as polynomials in y, with the powers of y split off.
struct RootLists {
    std::vector<std::string> f;
    std::vector<std::string> g;
    int E1 = 0;
    int E2 = 0;
};

/// One pair given by expressions, by root lists or by fixture name.
struct PairInput {
    std::optional<std::string> f;
    std::optional<std::string> g;
    std::optional<RootLists> roots;
    std::optional<std::string> fixture;
};

struct CommandInput {
    PairInput first;
    /// Second pair, used by compare.
    std::optional<PairInput> second;
    SessionOptions options;
};

struct CommandResult {
    std::string json;
    std::string text;
    int exit_code = 0;
};

extern const char* const kCommands[8];

/// Runs one command; library errors propagate as polartree::Error.
CommandResult run_command(const std::string& command, const CommandInput& input);

/// Resolves the pair to expressions, expanding fixtures and root lists.
PairSpec resolve_pair(const PairInput& input);

/// 0 ok, 1 verification failure, 2 input error, 3 field or truncation limitation.
int exit_code_for(ErrorCode code) noexcept;

}  // namespace polartree

#endif
