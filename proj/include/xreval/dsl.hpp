#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xreval/catalog.hpp"

namespace xreval {

/// One `count x operator` term of a mode expression. count >= 1.
struct OperatorTerm {
    std::int64_t count = 1;
    std::string symbol;

    friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

/// A named interaction modality as an ordered list of operator terms.
struct Mode {
    std::string name;
    std::vector<OperatorTerm> terms;

    /// Sum of term counts (the "consists of N operators" figure).
    std::int64_t operator_count() const;

    friend bool operator==(const Mode&, const Mode&) = default;
};

struct ModelSet {
    std::vector<Mode> modes;

    const Mode* find(std::string_view name) const;

    friend bool operator==(const ModelSet&, const ModelSet&) = default;
};

/// Position-carrying diagnostic. line/column are 1-based; offending_text is
/// a substring of the offending line.
struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
    std::string offending_text;

    std::string to_string() const;
};

template <typename T>
struct ParseResult {
    T value{};
    std::vector<ParseError> errors;

    bool ok() const noexcept { return errors.empty(); }
};

/// Parses catalog text, one `operator ...` declaration per line. Bad lines
/// are reported and skipped; parsing continues so a single pass reports
/// every error in the file.
ParseResult<Catalog> parse_catalog(std::string_view source);

/// Parses mode text, one `mode "Name": term + term + ...` per line. Every
/// referenced symbol must resolve in the given catalog.
ParseResult<ModelSet> parse_modes(std::string_view source, const Catalog& catalog);

/// Deterministic one-declaration-per-line form; output re-parses to a
/// structurally identical value.
std::string serialize_catalog(const Catalog& catalog);
std::string serialize_modes(const ModelSet& models);

}  // namespace xreval
