#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pebbling {

enum class errc {
    malformed_edge,
    loop_or_multiedge,
    disconnected_graph,
    invalid_parameter,
    invalid_invariants,
    overflow,
    no_efficient_set,
    not_efficient,
    not_dominating,
    budget_exceeded,
    bad_input,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Search abandoned; carries the bracket [lower, upper] proven before the abort.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::int64_t lower, std::int64_t upper)
        : Error(errc::budget_exceeded, what), lower_(lower), upper_(upper) {}

    std::int64_t lower() const noexcept { return lower_; }
    std::int64_t upper() const noexcept { return upper_; }

private:
    std::int64_t lower_;
    std::int64_t upper_;
};

} // namespace pebbling
