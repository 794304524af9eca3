#pragma once

#include <torsur/integers.hpp>

#include <string>

namespace torsur {

enum class Kappa { minus_infinity, zero, one, two };

std::string to_string(Kappa k);

enum class Parity { even, odd, unknown };

std::string to_string(Parity p);

// Rational homological invariants of a closed oriented 4-manifold.
struct HomologyFingerprint {
    long long b1 = 0;
    long long b2 = 0;
    long long b_plus = 0;
    long long euler = 0;
    long long signature = 0;

    bool operator==(const HomologyFingerprint&) const = default;
};

// chi = 2 - 2*b1 + b2 and sigma = 2*b_plus - b2 (b3 = b1, b0 = b4 = 1).
bool fingerprint_consistent(const HomologyFingerprint& f);

// Throws invariant_violation if inconsistent.
HomologyFingerprint make_fingerprint(long long b1, long long b2, long long b_plus,
                                     long long euler, long long signature);

}  // namespace torsur
