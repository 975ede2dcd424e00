#pragma once

#include <stdexcept>
#include <string>

namespace orelab {

/// Base of every error the library throws.
class Error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// A ring axiom failed on validation; the message names the failing triple.
class AxiomViolation : public Error
{
    public:
        using Error::Error;
};

/// A configured order bound was exceeded.
class OrderBoundExceeded : public Error
{
    public:
        OrderBoundExceeded(const std::string& what, std::size_t order, std::size_t bound)
            : Error(what + ": order " + std::to_string(order) + " exceeds bound " + std::to_string(bound)),
              order_(order), bound_(bound)
        {
        }

        std::size_t order() const { return order_; }
        std::size_t bound() const { return bound_; }

    private:
        std::size_t order_;
        std::size_t bound_;
};

/// Malformed constructor expression or ring file.
class ParseError : public Error
{
    public:
        ParseError(const std::string& msg, std::size_t position)
            : Error(msg + " (at offset " + std::to_string(position) + ")"), position_(position)
        {
        }

        std::size_t position() const { return position_; }

    private:
        std::size_t position_;
};

/// A set handed in as a multiplicative set is not one (witness in message).
class NotMultiplicative : public Error
{
    public:
        using Error::Error;
};

class ZeroInSet : public Error
{
    public:
        using Error::Error;
};

/// The multiplicative closure of a generating set reached 0.
class ZeroInClosure : public Error
{
    public:
        using Error::Error;
};

class NotDenominator : public Error
{
    public:
        using Error::Error;
};

class NotPrime : public Error
{
    public:
        using Error::Error;
};

class NotAProduct : public Error
{
    public:
        using Error::Error;
};

/**
 * Two computations that must agree did not. This always indicates a bug in
 * the library, never a mathematical property of the input ring.
 */
class InternalInconsistency : public Error
{
    public:
        using Error::Error;
};

inline void ensure(bool cond, const std::string& what)
{
    if (!cond)
        throw InternalInconsistency(what);
}

} // namespace orelab
