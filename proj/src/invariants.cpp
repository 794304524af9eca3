#include <torsur/invariants.hpp>

namespace torsur {

std::string to_string(Kappa k) {
    switch (k) {
        case Kappa::minus_infinity: return "-infinity";
        case Kappa::zero: return "0";
        case Kappa::one: return "1";
        case Kappa::two: return "2";
    }
    return "?";
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::unknown: return "unknown";
    }
    return "?";
}

bool fingerprint_consistent(const HomologyFingerprint& f) {
    return f.b1 >= 0 && f.b2 >= 0 && f.b_plus >= 0 && f.b_plus <= f.b2 &&
           f.euler == 2 - 2 * f.b1 + f.b2 && f.signature == 2 * f.b_plus - f.b2;
}

HomologyFingerprint make_fingerprint(long long b1, long long b2, long long b_plus,
                                     long long euler, long long signature) {
    HomologyFingerprint f{b1, b2, b_plus, euler, signature};
    if (!fingerprint_consistent(f))
        throw Error(ErrorKind::invariant_violation, "inconsistent homology fingerprint");
    return f;
}

}  // namespace torsur
