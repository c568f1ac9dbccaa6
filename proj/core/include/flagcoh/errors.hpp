#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagcoh {

// Every failure raised by the library derives from Error so that callers
// (the CLI in particular) can catch a single type at the boundary.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidType : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    CapExceeded(std::size_t order, std::size_t cap)
        : Error("Weyl group order " + std::to_string(order) + " exceeds enumeration cap " +
                std::to_string(cap)),
          order_(order), cap_(cap) {}
    std::size_t order() const noexcept { return order_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t order_;
    std::size_t cap_;
};

class TypeMismatch : public Error {
public:
    using Error::Error;
};

class DiamondViolation : public Error {
public:
    using Error::Error;
};

class Unsolvable : public Error {
public:
    using Error::Error;
};

class UnsupportedType : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class OddSquaredDegree : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class FieldNotSplit : public Error {
public:
    using Error::Error;
};

class Mismatch : public Error {
public:
    using Error::Error;
};

class DegenerateSpectrum : public Error {
public:
    using Error::Error;
};

class WindowTooSmall : public Error {
public:
    using Error::Error;
};

class UnknownFormat : public Error {
public:
    using Error::Error;
};

}  // namespace flagcoh
