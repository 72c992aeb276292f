#ifndef QVERIFY_ERRORS_HPP
#define QVERIFY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qverify {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division of a rational function by the zero function.
class DivisionByZeroFunction : public Error {
public:
    DivisionByZeroFunction() : Error("division by the zero function") {}
    explicit DivisionByZeroFunction(const std::string& what) : Error(what) {}
};

/// A denominator vanished under modular evaluation; the caller resamples the point.
class Pole : public Error {
public:
    Pole() : Error("pole: denominator vanishes at the evaluation point") {}
};

/// A rational coefficient cannot be reduced modulo the chosen prime.
class CoefficientDenominatorDivisibleByP : public Error {
public:
    CoefficientDenominatorDivisibleByP() : Error("coefficient denominator divisible by the prime") {}
};

class ZeroFactorInNegativeLength : public Error {
public:
    ZeroFactorInNegativeLength() : Error("negative-length Pochhammer symbol has a vanishing factor") {}
};

class VanishingDenominatorFactor : public Error {
public:
    explicit VanishingDenominatorFactor(std::size_t k)
        : Error("denominator Pochhammer factor vanishes identically at k = " + std::to_string(k)) {}
};

class NonTerminatingSeries : public Error {
public:
    explicit NonTerminatingSeries(const std::string& what) : Error(what) {}
};

class InstantiationBelowRange : public Error {
public:
    InstantiationBelowRange(const std::string& id, long long n, long long n_min)
        : Error("cannot instantiate " + id + " at n = " + std::to_string(n) + " (valid for n >= " +
                std::to_string(n_min) + ")") {}
};

/// Raised when an expression that must denote a signed monomial does not.
class NotAMonomial : public Error {
public:
    explicit NotAMonomial(const std::string& what) : Error(what) {}
};

/// Errors in catalog DSL input; carry a 1-based source position.
class DslError : public Error {
public:
    DslError(const std::string& kind, std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + kind + ": " + message),
          kind_(kind), line_(line), column_(column), message_(message) {}

    const std::string& kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string kind_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

class SyntaxError : public DslError {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message)
        : DslError("SyntaxError", line, column, message) {}
};

class NonAffineExponent : public DslError {
public:
    NonAffineExponent(std::size_t line, std::size_t column, const std::string& message)
        : DslError("NonAffineExponent", line, column, message) {}
};

class UnknownSymbol : public DslError {
public:
    UnknownSymbol(std::size_t line, std::size_t column, const std::string& message)
        : DslError("UnknownSymbol", line, column, message) {}
};

} // namespace qverify

#endif
