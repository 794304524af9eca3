#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <stdexcept>
#include <string>

namespace torsur {

// All homology arithmetic is exact. SNF intermediates can blow past any
// fixed width even for small inputs, so arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// --- error taxonomy -------------------------------------------------------

enum class ErrorKind {
    dimension,            // mismatched vector/matrix dimensions
    invalid_framing,      // (mu, v1, v2) not unimodular
    invariant_violation,  // a stated structural invariant fails on input
    inconsistent_ambient, // ambient invariants contradict derived data
    not_applicable,       // operation precondition not met for this input
    requires_minimal_model,
    unrealizable_profile,
    missing_data,         // optional field required by this operation
    parse,                // malformed instance document
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace torsur
