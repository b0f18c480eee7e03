#pragma once

#include <stdexcept>
#include <string>

namespace mbh {

/* Exact arithmetic never silently degrades: every contract violation has a
   named error so the verification harness can convert expected ones into
   report entries and let genuine faults escape. */

struct BadArgument : std::runtime_error {
    explicit BadArgument(const std::string& m) : std::runtime_error(m) {}
};

struct ZeroDivide : std::runtime_error {
    explicit ZeroDivide(const std::string& m) : std::runtime_error(m) {}
};

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& m) : std::runtime_error(m) {}
};

struct NegativeExponent : std::runtime_error {
    explicit NegativeExponent(const std::string& m) : std::runtime_error(m) {}
};

struct NotPalindromic : std::runtime_error {
    explicit NotPalindromic(const std::string& m) : std::runtime_error(m) {}
};

struct BadConstantTerm : std::runtime_error {
    explicit BadConstantTerm(const std::string& m) : std::runtime_error(m) {}
};

struct OrderExhausted : std::runtime_error {
    explicit OrderExhausted(const std::string& m) : std::runtime_error(m) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& m) : std::runtime_error(m) {}
};

/* Raised by the prefix-minor routine when a leading principal minor vanishes;
   callers fall back to per-size elimination with row pivoting. */
struct ZeroPivot : std::runtime_error {
    long step;
    explicit ZeroPivot(long s)
        : std::runtime_error("zero pivot at elimination step " + std::to_string(s)), step(s) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

/* A series that was expected to terminate kept producing nonzero coefficients. */
struct NotPolynomial : std::runtime_error {
    explicit NotPolynomial(const std::string& m) : std::runtime_error(m) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& m) : std::runtime_error(m) {}
};

/* The x -> ix sign twist is only defined on polynomials with even support. */
struct OddTermInEvenPoly : std::runtime_error {
    explicit OddTermInEvenPoly(const std::string& m) : std::runtime_error(m) {}
};

struct InsufficientTerms : std::runtime_error {
    explicit InsufficientTerms(const std::string& m) : std::runtime_error(m) {}
};

} // namespace mbh
