#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kkv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two series in different formal variables were combined.
class VariableMismatch : public Error {
public:
    using Error::Error;
};

// A requested coefficient or order lies outside the range a value is known to.
class TruncationError : public Error {
public:
    using Error::Error;
};

// An operation was applied outside its mathematical domain
// (inverting zero, exp of a series with a constant term, asymmetric input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Index sets of a matrix and a vector do not line up.
class IndexMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix(std::size_t rank, std::size_t size)
        : Error("singular Noether-Lefschetz matrix: rank " + std::to_string(rank) + " < " +
                std::to_string(size)),
          rank_(rank), size_(size)
    {
    }

    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return size_; }

private:
    std::size_t rank_;
    std::size_t size_;
};

// The q = -e^{iu} substitution produced an imaginary or odd-degree coefficient.
class NonRealSubstitution : public Error {
public:
    NonRealSubstitution(const std::string& what, int degree) : Error(what), degree_(degree) {}

    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

} // namespace kkv
