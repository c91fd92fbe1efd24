#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qlsm/errors.hpp"
#include "qlsm/statevec.hpp"

using namespace qlsm;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("uniform superposition amplitudes") {
    SUBCASE("n=1 gives the Hadamard pair") {
        const StateVector s = uniform_superposition(1);
        REQUIRE(s.dim() == 2);
        CHECK(s.amplitude(0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));
        CHECK(s.amplitude(1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    }
    SUBCASE("n=3 gives 1/sqrt(8) on all eight components") {
        const StateVector s = uniform_superposition(3);
        REQUIRE(s.dim() == 8);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(s.amplitude(i).real() == doctest::Approx(0.35355339059327373).epsilon(1e-12));
            CHECK(s.amplitude(i).imag() == 0.0);
            CHECK(s.amplitude(i).real() > 0.0);
        }
    }
    SUBCASE("size cap enforced") {
        CHECK_THROWS_AS(uniform_superposition(21), SizeError);
        CHECK_THROWS_AS(uniform_superposition(0), SizeError);
    }
}

TEST_CASE("rotate_y basics") {
    const StateVector zero = StateVector::zero_state(1);

    SUBCASE("pi/2 maps |0> to (|0>+|1>)/sqrt(2)") {
        const StateVector s = rotate_y(zero, 0, M_PI / 2.0);
        CHECK(std::abs(s.amplitude(0) - cplx{kInvSqrt2, 0.0}) < 1e-12);
        CHECK(std::abs(s.amplitude(1) - cplx{kInvSqrt2, 0.0}) < 1e-12);
    }
    SUBCASE("angle 0 is the identity") {
        const StateVector s = uniform_superposition(2);
        const StateVector r = rotate_y(s, 1, 0.0);
        for (std::size_t i = 0; i < s.dim(); ++i)
            CHECK(std::abs(r.amplitude(i) - s.amplitude(i)) < 1e-15);
    }
    SUBCASE("pi flips |0> to |1> up to sign") {
        const StateVector s = rotate_y(zero, 0, M_PI);
        CHECK(std::abs(std::abs(s.amplitude(1)) - 1.0) < 1e-12);
        CHECK(std::abs(s.amplitude(0)) < 1e-12);
    }
    SUBCASE("bad qubit index") {
        CHECK_THROWS_AS(rotate_y(zero, 1, 0.1), IndexError);
        CHECK_THROWS_AS(rotate_y(zero, -1, 0.1), IndexError);
    }
}

TEST_CASE("inner products") {
    SUBCASE("normalized state with itself") {
        const StateVector s = uniform_superposition(3);
        const cplx ip = inner_product(s, s);
        CHECK(std::abs(ip - cplx{1.0, 0.0}) < 1e-12);
    }
    SUBCASE("orthogonal basis states") {
        const StateVector zero = StateVector::zero_state(1);
        const StateVector one = rotate_y(zero, 0, M_PI);
        CHECK(std::abs(inner_product(zero, one)) < 1e-12);
    }
    SUBCASE("uniform(2) against |00>") {
        const StateVector u = uniform_superposition(2);
        const StateVector z = StateVector::zero_state(2);
        CHECK(std::abs(inner_product(u, z) - cplx{0.5, 0.0}) < 1e-12);
    }
    SUBCASE("conjugate symmetry") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        std::vector<cplx> a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = cplx{coef(rng), coef(rng)};
            b[i] = cplx{coef(rng), coef(rng)};
        }
        const StateVector sa(2, a), sb(2, b);
        const cplx ab = inner_product(sa, sb);
        const cplx ba = inner_product(sb, sa);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(inner_product(uniform_superposition(1), uniform_superposition(2)),
                        SizeError);
    }
}

TEST_CASE("measurement") {
    SUBCASE("eigenstate is deterministic") {
        const StateVector one = rotate_y(StateVector::zero_state(1), 0, M_PI);
        std::mt19937_64 rng(1);
        const MeasurementOutcome out = measure_qubit(one, 0, rng);
        CHECK(out.bit == 1);
        CHECK(out.probability == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("seeded runs reproduce the outcome") {
        const StateVector plus = uniform_superposition(1);
        std::mt19937_64 rng_a(42), rng_b(42);
        const MeasurementOutcome a = measure_qubit(plus, 0, rng_a);
        const MeasurementOutcome b = measure_qubit(plus, 0, rng_b);
        CHECK(a.bit == b.bit);
        CHECK(a.probability == b.probability);
    }
    SUBCASE("Bell state collapses both qubits") {
        std::vector<cplx> amps(4, cplx{0.0, 0.0});
        amps[0] = cplx{kInvSqrt2, 0.0};
        amps[3] = cplx{kInvSqrt2, 0.0};
        const StateVector bell(2, amps);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::mt19937_64 rng(seed);
            const MeasurementOutcome out = measure_qubit(bell, 0, rng);
            const std::size_t expect = out.bit ? 3 : 0;
            CHECK(std::abs(std::abs(out.post_state.amplitude(expect)) - 1.0) < 1e-12);
            CHECK(out.probability == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(out.post_state.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("statistics match squared amplitudes within 3 standard errors") {
        const StateVector s = rotate_y(StateVector::zero_state(1), 0, 1.1);
        const double p1 = std::norm(s.amplitude(1));
        const int trials = 10000;
        std::mt19937_64 rng(2024);
        int ones = 0;
        for (int t = 0; t < trials; ++t)
            if (measure_qubit(s, 0, rng).bit) ++ones;
        const double se = std::sqrt(p1 * (1.0 - p1) / trials);
        CHECK(std::abs(static_cast<double>(ones) / trials - p1) < 3.0 * se);
    }
}

TEST_CASE("norm stays put over many rotations") {
    StateVector s = uniform_superposition(3);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> qubit(0, 2);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (int i = 0; i < 10000; ++i) s = rotate_y(s, qubit(rng), angle(rng));
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
}

TEST_CASE("rotation inverts with negated angle") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::uniform_int_distribution<int> qubit(0, 3);
    StateVector s = uniform_superposition(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int q = qubit(rng);
        const double a = angle(rng);
        const StateVector back = rotate_y(rotate_y(s, q, a), q, -a);
        for (std::size_t i = 0; i < s.dim(); ++i)
            CHECK(std::abs(back.amplitude(i) - s.amplitude(i)) < 1e-9);
        s = rotate_y(s, q, a);  // walk through state space as we go
    }
}
