#pragma once

#include <stdexcept>
#include <string>

namespace bolkit {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoNeutral : Error {
    NoNeutral() : Error("table has no neutral element") {}
    explicit NoNeutral(const std::string& what) : Error(what) {}
};

struct NotBol : Error {
    NotBol() : Error("table does not satisfy the right Bol identity") {}
    explicit NotBol(const std::string& what) : Error(what) {}
};

struct NotInvertible : Error {
    int element;
    explicit NotInvertible(int element_)
        : Error("element " + std::to_string(element_) + " has no two-sided inverse"),
          element(element_) {}
};

// Raised when a right Bol table yields two distinct two-sided inverses for
// one element. That contradicts a proven uniqueness statement, so it signals
// a corrupted table or a checker bug rather than a user error.
struct NonUniqueInverse : Error {
    int element;
    int first_inverse;
    int second_inverse;
    NonUniqueInverse(int element_, int first_, int second_)
        : Error("element " + std::to_string(element_) + " has two-sided inverses " +
                std::to_string(first_) + " and " + std::to_string(second_) +
                " in a right Bol table"),
          element(element_), first_inverse(first_), second_inverse(second_) {}
};

struct NotClosed : Error {
    int left_factor;
    int right_factor;
    NotClosed(int a, int b)
        : Error("invertible elements are not closed: product of " + std::to_string(a) +
                " and " + std::to_string(b) + " has no two-sided inverse"),
          left_factor(a), right_factor(b) {}
};

struct InvalidRing : Error {
    InvalidRing() : Error("ring axioms do not hold") {}
    explicit InvalidRing(const std::string& what) : Error(what) {}
};

struct NoUnity : Error {
    NoUnity() : Error("ring has no declared unity") {}
};

struct NotAlternative : Error {
    explicit NotAlternative(const std::string& what) : Error(what) {}
};

struct NotStronglyRightAlternative : Error {
    explicit NotStronglyRightAlternative(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    int line;
    ParseError(const std::string& what, int line_)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace bolkit
