#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xreval/errors.hpp"

namespace xreval {

enum class OperatorCategory { perceptual, cognitive, motor, general };

const char* to_string(OperatorCategory category);
std::optional<OperatorCategory> category_from_string(std::string_view text);

/// letter (letter | digit | "_")*
bool is_identifier(std::string_view text);

/// Operator duration: a fixed number of milliseconds or a named symbolic
/// parameter. Fixed values are non-negative integers; parameter names are
/// identifiers.
class Duration {
public:
    static Duration fixed(std::int64_t ms) {
        if (ms < 0) throw NegativeDurationError();
        Duration d;
        d.ms_ = ms;
        return d;
    }

    static Duration parameter(std::string name);

    bool is_fixed() const noexcept { return param_.empty(); }
    bool is_parameter() const noexcept { return !param_.empty(); }

    /// Milliseconds of a fixed duration. Only valid when is_fixed().
    std::int64_t ms() const {
        if (!is_fixed()) throw InvalidArgumentError("duration is symbolic, not fixed");
        return ms_;
    }

    /// Name bound by a symbolic duration. Only valid when is_parameter().
    const std::string& parameter_name() const {
        if (!is_parameter()) throw InvalidArgumentError("duration is fixed, not symbolic");
        return param_;
    }

    friend bool operator==(const Duration&, const Duration&) = default;

private:
    Duration() = default;
    std::int64_t ms_ = 0;
    std::string param_;
};

struct OperatorDef {
    std::string symbol;
    std::string display_name;
    OperatorCategory category = OperatorCategory::general;
    Duration duration = Duration::fixed(0);
    std::string source;

    friend bool operator==(const OperatorDef&, const OperatorDef&) = default;
};

/// Ordered, duplicate-free collection of operator definitions. A value type:
/// overrides build a modified copy and never touch the original.
class Catalog {
public:
    Catalog() = default;
    Catalog(const Catalog&) = default;
    Catalog(Catalog&&) = default;
    Catalog& operator=(const Catalog&) = default;
    Catalog& operator=(Catalog&&) = default;

    /// Appends a definition. Throws DuplicateSymbolError if the symbol is
    /// already declared and InvalidIdentifierError if it is not an identifier.
    void add(OperatorDef def);

    bool contains(std::string_view symbol) const { return find(symbol) != nullptr; }

    /// Total over declared symbols; throws UnknownOperatorError otherwise.
    const OperatorDef& lookup(std::string_view symbol) const;

    /// nullptr when absent.
    const OperatorDef* find(std::string_view symbol) const;

    /// Copy of this catalog with one operator's duration replaced.
    Catalog with_override(std::string_view symbol, const Duration& duration) const;

    const std::vector<OperatorDef>& operators() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }

    friend bool operator==(const Catalog& a, const Catalog& b) { return a.ops_ == b.ops_; }

private:
    std::vector<OperatorDef> ops_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// The built-in catalog of all fourteen operators used by the bundled XR
/// interaction models, with their literature-derived durations. A stays
/// symbolic: no published value exists and it is task dependent.
Catalog builtin_catalog();

}  // namespace xreval
