#ifndef CHORDAL_ERROR_HPP
#define CHORDAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chordal {

/// Malformed or out-of-range input (bad labels, n > 64, parse failures).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (VOID complex, zero ideal,
/// a complex that is not a d-closure, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A search exceeded its node budget. The verdict is unknown, never false.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(std::string search, long long limit)
        : std::runtime_error(search + ": node budget of " + std::to_string(limit) +
                             " states exhausted, result inconclusive"),
          search_(std::move(search)) {}

    const std::string& search() const { return search_; }

private:
    std::string search_;
};

}  // namespace chordal

#endif  // CHORDAL_ERROR_HPP
