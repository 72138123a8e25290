#ifndef WITTKIT_ERROR_HPP
#define WITTKIT_ERROR_HPP

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wittkit
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

// Enumeration would exceed the configured evaluation budget.
class BudgetError : public Error
{
public:
    using Error::Error;
};

// A face of a 1-cycle leaves the allowed locus.
class GoodPositionError : public DomainError
{
public:
    GoodPositionError(std::size_t index, bool at_infinity, std::string what)
        : DomainError(what), index_(index), at_infinity_(at_infinity)
    {
    }

    std::size_t face_index() const noexcept { return index_; }
    bool face_at_infinity() const noexcept { return at_infinity_; }

private:
    std::size_t index_;
    bool at_infinity_;
};

namespace detail
{

[[noreturn]] inline void integrity_failure(const char *file, int line, const std::string &msg)
{
    std::fprintf(stderr, "wittkit: internal integrity check failed at %s:%d: %s\n", file, line, msg.c_str());
    std::abort();
}

} // namespace detail

} // namespace wittkit

// Invariants whose failure means an implementation bug, never bad input.
#define WITTKIT_ASSERT(cond, msg)                                                                                      \
    do {                                                                                                               \
        if (!(cond)) ::wittkit::detail::integrity_failure(__FILE__, __LINE__, (msg));                                  \
    } while (0)

#endif
