#ifndef TREELATTICE_ERROR_HPP
#define TREELATTICE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treelattice {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax or structural problem in a graph file; carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Graph parsed but violates a hypothesis (regularity, connectivity, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Enumeration would visit more tree vertices than allowed.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
        : Error("ball of " + std::to_string(needed) + " vertices exceeds budget " +
                std::to_string(budget)),
          needed_(needed), budget_(budget) {}
    std::uint64_t needed() const noexcept { return needed_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t needed_;
    std::uint64_t budget_;
};

}  // namespace treelattice

#endif  // TREELATTICE_ERROR_HPP
