#include <torsur/catalog.hpp>
#include <torsur/kodaira.hpp>

#include <doctest.h>

#include <random>

using namespace torsur;

TEST_CASE("classify_kappa covers the four-case table") {
    CHECK(classify_kappa({-1, 2, 1, true}) == Kappa::minus_infinity);
    CHECK(classify_kappa({3, -1, 1, true}) == Kappa::minus_infinity);
    CHECK(classify_kappa({0, 0, 1, true}) == Kappa::zero);
    CHECK(classify_kappa({0, Rational(7, 2), 1, true}) == Kappa::one);
    CHECK(classify_kappa({5, 1, 1, true}) == Kappa::two);
}

TEST_CASE("classify_kappa error paths") {
    CHECK_THROWS_AS(classify_kappa({0, 0, 0, true}), Error);   // omega^2 <= 0
    CHECK_THROWS_AS(classify_kappa({0, 0, -2, true}), Error);
    CHECK_THROWS_AS(classify_kappa({0, 0, 1, false}), Error);  // non-minimal
    CHECK_THROWS_AS(classify_kappa({4, 0, 1, true}), Error);   // K^2>0, K.w=0

    try {
        classify_kappa({4, 0, 1, true});
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unrealizable_profile);
    }
    try {
        classify_kappa({0, 0, 1, false});
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::requires_minimal_model);
    }
}

TEST_CASE("classify_kappa is exhaustive over random rational profiles") {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        KodairaProfile p;
        p.k_squared = num(rng);
        p.k_dot_omega = Rational(num(rng), den(rng));
        p.omega_squared = Rational(den(rng), den(rng));
        p.minimal = true;
        if (p.k_squared > 0 && p.k_dot_omega == 0) {
            CHECK_THROWS_AS(classify_kappa(p), Error);
        } else {
            Kappa k = classify_kappa(p);
            // consistency with the defining inequalities
            if (p.k_squared < 0 || p.k_dot_omega < 0)
                CHECK(k == Kappa::minus_infinity);
            else if (p.k_squared == 0 && p.k_dot_omega == 0)
                CHECK(k == Kappa::zero);
            else if (p.k_squared == 0)
                CHECK(k == Kappa::one);
            else
                CHECK(k == Kappa::two);
        }
    }
}

TEST_CASE("cy_table_lookup") {
    CHECK(cy_table_lookup(make_fingerprint(0, 22, 3, 24, -16)) == CyLabel::k3_type);
    CHECK(cy_table_lookup(make_fingerprint(0, 10, 1, 12, -8)) ==
          CyLabel::enriques_type);
    CHECK(cy_table_lookup(make_fingerprint(4, 6, 3, 0, 0)) == CyLabel::t4_type);
    CHECK(cy_table_lookup(make_fingerprint(3, 4, 2, 0, 0)) ==
          CyLabel::t2_bundle_b1_3);
    CHECK(cy_table_lookup(make_fingerprint(2, 2, 1, 0, 0)) ==
          CyLabel::t2_bundle_b1_2);

    SUBCASE("perturbed rows never match") {
        const HomologyFingerprint rows[] = {
            {0, 22, 3, 24, -16}, {0, 10, 1, 12, -8}, {4, 6, 3, 0, 0},
            {3, 4, 2, 0, 0},     {2, 2, 1, 0, 0},
        };
        for (const HomologyFingerprint& r : rows) {
            // bump each field by +1/-1 and expect no table hit
            for (int field = 0; field < 5; ++field)
                for (int d : {-1, 1}) {
                    HomologyFingerprint f = r;
                    switch (field) {
                        case 0: f.b1 += d; break;
                        case 1: f.b2 += d; break;
                        case 2: f.b_plus += d; break;
                        case 3: f.euler += d; break;
                        case 4: f.signature += d; break;
                    }
                    CHECK(cy_table_lookup(f) == CyLabel::no_match);
                }
        }
    }
}

TEST_CASE("almost toric bases") {
    const AlmostToricBase all[] = {
        AlmostToricBase::disk,   AlmostToricBase::cylinder, AlmostToricBase::moebius,
        AlmostToricBase::sphere, AlmostToricBase::rp2,      AlmostToricBase::torus,
        AlmostToricBase::klein,
    };
    for (AlmostToricBase b : all) {
        // name round-trip
        auto parsed = parse_almost_toric_base(to_string(b));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == b);

        AlmostToricFamilies fam = almost_toric_lookup(b);
        CHECK_FALSE(fam.families.empty());
        bool closed = b == AlmostToricBase::sphere || b == AlmostToricBase::rp2 ||
                      b == AlmostToricBase::torus || b == AlmostToricBase::klein;
        CHECK((fam.kappa == Kappa::zero) == closed);
        if (!closed) CHECK(fam.kappa == Kappa::minus_infinity);
    }
    CHECK_FALSE(parse_almost_toric_base("pair-of-pants").has_value());
}

TEST_CASE("check_surgery_consistency") {
    HomologyFingerprint cp2 = make_fingerprint(0, 1, 1, 3, 1);
    SUBCASE("euler/signature invariance always enforced") {
        HomologyFingerprint bad = make_fingerprint(0, 3, 2, 5, 1);
        ConsistencyReport r = check_surgery_consistency({}, cp2, Parity::odd, bad,
                                                        Parity::odd, 1);
        CHECK_FALSE(r.passed);
        CHECK(r.violations.size() == 1);
    }
    SUBCASE("kappa = -infinity demands an unchanged fingerprint and parity") {
        ConsistencyReport ok = check_surgery_consistency(
            Kappa::minus_infinity, cp2, Parity::odd, cp2, Parity::odd, 1);
        CHECK(ok.passed);

        HomologyFingerprint shifted = make_fingerprint(1, 3, 2, 3, 1);
        ConsistencyReport bad = check_surgery_consistency(
            Kappa::minus_infinity, cp2, Parity::odd, shifted, Parity::odd, 1);
        CHECK_FALSE(bad.passed);

        ConsistencyReport flipped = check_surgery_consistency(
            Kappa::minus_infinity, cp2, Parity::odd, cp2, Parity::even, 1);
        CHECK_FALSE(flipped.passed);
    }
    SUBCASE("kappa = 0 with positive euler preserves rational homology") {
        HomologyFingerprint k3 = make_fingerprint(0, 22, 3, 24, -16);
        ConsistencyReport ok = check_surgery_consistency(Kappa::zero, k3,
                                                         Parity::even, k3,
                                                         Parity::even, 1);
        CHECK(ok.passed);

        HomologyFingerprint moved = make_fingerprint(1, 24, 4, 24, -16);
        ConsistencyReport bad = check_surgery_consistency(Kappa::zero, k3,
                                                          Parity::even, moved,
                                                          Parity::even, 1);
        CHECK_FALSE(bad.passed);

        // chi = 0: rational homology may change, only chi/sigma enforced
        HomologyFingerprint t4 = make_fingerprint(4, 6, 3, 0, 0);
        HomologyFingerprint dropped = make_fingerprint(3, 4, 2, 0, 0);
        ConsistencyReport loose = check_surgery_consistency(Kappa::zero, t4,
                                                            Parity::even, dropped,
                                                            Parity::even, 1);
        CHECK(loose.passed);
    }
    SUBCASE("|p| != 1 downgrades kappa checks to a warning") {
        HomologyFingerprint shifted = make_fingerprint(1, 3, 2, 3, 1);
        ConsistencyReport r = check_surgery_consistency(
            Kappa::minus_infinity, cp2, Parity::odd, shifted, Parity::odd, 2);
        CHECK(r.passed);
        CHECK_FALSE(r.warnings.empty());
    }
}

TEST_CASE("essentiality_class") {
    CHECK(essentiality_class(entry_clifford().complement) ==
          EssentialityClass::null_homologous);
    CHECK(essentiality_class(entry_trivial_knot().complement) ==
          EssentialityClass::null_homologous);

    SUBCASE("torsion ambient status") {
        AmbientData amb;
        amb.l_class_status = LClassStatus::torsion;
        amb.b2 = 1;
        amb.b_plus = 1;
        amb.signature = 1;
        amb.euler = 3;
        ComplementPresentation c(Presentation(1, IntMatrix(0, 1)), {1}, {0}, {0},
                                 {}, amb);
        CHECK(essentiality_class(c) == EssentialityClass::torsion);
    }
    SUBCASE("essential: meridian image rationally zero") {
        ComplementPresentation c(Presentation(2, IntMatrix(0, 2)), {0, 0}, {1, 0},
                                 {0, 1});
        CHECK(essentiality_class(c) == EssentialityClass::essential);
    }
    SUBCASE("completely essential: zero i1") {
        ComplementPresentation c(Presentation(1, IntMatrix(0, 1)), {0}, {0}, {0});
        CHECK(essentiality_class(c) == EssentialityClass::completely_essential);
    }
}
