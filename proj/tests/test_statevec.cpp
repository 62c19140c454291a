// Copyright 2026 The iclq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "iclq/error.hpp"
#include "iclq/phase_space.hpp"
#include "iclq/statevec.hpp"
#include "iclq/teleport.hpp"
#include "oracle.hpp"

using namespace iclq;

namespace {

oracle::Vec to_vec(const StateVector& s) { return {s.amps().begin(), s.amps().end()}; }

StateVector from_vec(std::size_t n, const oracle::Vec& v) { return StateVector(n, v); }

StateVector phi_plus() {
    const double h = oracle::kInvSqrt2;
    return StateVector(2, {h, 0, 0, h});
}

}  // namespace

TEST(StateVector, RejectsBadShape) {
    EXPECT_THROW(StateVector(2, {1, 0, 0}), DimensionError);
    EXPECT_THROW(StateVector(4, std::vector<Amplitude>(16, 0.25)), DimensionError);
    EXPECT_THROW(StateVector(1, {1, 1}), ValidationError);
    EXPECT_THROW(StateVector(1, {NAN, 0}), ValidationError);
    EXPECT_THROW(StateVector::basis(2, 4), IndexError);
    EXPECT_THROW(StateVector::normalized(1, std::vector<Amplitude>{0, 0}), ValidationError);
}

TEST(StateVector, QubitCountBounds) {
    EXPECT_THROW(StateVector(0, {Amplitude(0, 1)}), DimensionError);
    EXPECT_EQ(StateVector::basis(3, 7).dim(), 8u);
}

TEST(Tensor, BasisProducts) {
    const StateVector t = tensor(StateVector::basis(1, 0), StateVector::basis(1, 0));
    EXPECT_LT(max_abs_diff(t.amps(), oracle::Vec{1, 0, 0, 0}), 1e-15);
    // |1>|0> is the third Wannier state.
    const StateVector r2 = tensor(StateVector::basis(1, 1), StateVector::basis(1, 0));
    EXPECT_LT(max_abs_diff(r2.amps(), oracle::Vec{0, 0, 1, 0}), 1e-15);
}

TEST(Tensor, InputTimesPhiPlus) {
    const Amplitude a(0.6, 0.0), b(0.0, 0.8);
    const double h = oracle::kInvSqrt2;
    const oracle::Vec by_hand{a * h, 0, 0, a * h, b * h, 0, 0, b * h};
    const oracle::Vec brute = oracle::kron({a, b}, oracle::bell_vectors()[0]);
    EXPECT_LT(oracle::max_diff(by_hand, brute), 1e-15);
    const StateVector t = tensor(StateVector(1, {a, b}), phi_plus());
    EXPECT_EQ(t.qubit_count(), 3u);
    EXPECT_LT(max_abs_diff(t.amps(), brute), 1e-15);
}

TEST(Tensor, OverflowRejected) {
    EXPECT_THROW(tensor(phi_plus(), phi_plus()), DimensionError);
}

TEST(Tensor, AssociativeAgainstTripleLoop) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::random_vec(rng, 2), b = oracle::random_vec(rng, 2),
                   c = oracle::random_vec(rng, 2);
        oracle::Vec triple(8);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) triple[4 * i + 2 * j + k] = a[i] * b[j] * c[k];
        const StateVector sa(1, a), sb(1, b), sc(1, c);
        EXPECT_LT(max_abs_diff(tensor(tensor(sa, sb), sc).amps(), triple), 1e-14);
        EXPECT_LT(max_abs_diff(tensor(sa, tensor(sb, sc)).amps(), triple), 1e-14);
    }
}

TEST(Apply1q, PauliActions) {
    const StateVector one = apply_1q(StateVector::basis(1, 0), gates::pauli_x(), 1);
    EXPECT_LT(max_abs_diff(one.amps(), oracle::Vec{0, 1}), 1e-15);
    const StateVector minus_one = apply_1q(StateVector::basis(1, 1), gates::pauli_z(), 1);
    EXPECT_LT(max_abs_diff(minus_one.amps(), oracle::Vec{0, -1}), 1e-15);
    const StateVector flipped = apply_1q(phi_plus(), gates::pauli_x(), 1);
    EXPECT_LT(max_abs_diff(flipped.amps(), oracle::bell_vectors()[2]), 1e-15);
}

TEST(Apply1q, TargetOutOfRange) {
    EXPECT_THROW(apply_1q(phi_plus(), gates::pauli_x(), 0), IndexError);
    EXPECT_THROW(apply_1q(phi_plus(), gates::pauli_x(), 3), IndexError);
}

TEST(Apply1q, MatchesKronOracleOnThreeQubits) {
    std::mt19937_64 rng(5);
    const oracle::Mat h{{oracle::kInvSqrt2, oracle::kInvSqrt2},
                        {oracle::kInvSqrt2, -oracle::kInvSqrt2}};
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = oracle::random_vec(rng, 8);
        const StateVector s(3, v);
        for (std::size_t target = 1; target <= 3; ++target) {
            oracle::Mat full = oracle::eye(1);
            for (std::size_t q = 1; q <= 3; ++q) {
                full = oracle::kron(full, q == target ? h : oracle::eye(2));
            }
            const StateVector got = apply_1q(s, gates::hadamard(), target);
            EXPECT_LT(max_abs_diff(got.amps(), oracle::matvec(full, v)), 1e-14);
        }
    }
}

TEST(Apply, NormPreservedForRandomUnitaries) {
    RandomSource rand(99);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector s = random_state(rand, 2);
        const StateVector t = apply(s, dft4());
        double n2 = 0;
        for (auto a : t.amps()) n2 += std::norm(a);
        EXPECT_NEAR(n2, 1.0, kTolerance);
        const StateVector u = apply_1q(s, gates::hadamard(), 2);
        n2 = 0;
        for (auto a : u.amps()) n2 += std::norm(a);
        EXPECT_NEAR(n2, 1.0, kTolerance);
    }
}

TEST(Gates, Involutions) {
    const Matrix i2 = Matrix::identity(2);
    for (const Unitary2& g : {gates::pauli_x(), gates::pauli_z(), gates::hadamard()}) {
        EXPECT_LT(max_abs_diff((g * g).matrix(), i2), kTolerance);
    }
}

TEST(Gates, NonUnitaryRejected) {
    EXPECT_THROW(Unitary2(Matrix::from_rows({1, 1, 0, 1})), ValidationError);
    EXPECT_THROW(Unitary2(Matrix::identity(4)), DimensionError);
    EXPECT_THROW(Unitary4(Matrix::identity(2)), DimensionError);
}

TEST(Matrix, FromRowsNeedsSquareCount) {
    EXPECT_THROW(Matrix::from_rows({1, 2, 3}), DimensionError);
    EXPECT_THROW(Matrix(9), DimensionError);
}

TEST(Overlap, Examples) {
    const auto bells = oracle::bell_vectors();
    EXPECT_NEAR(std::abs(overlap(phi_plus(), phi_plus()) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(overlap(phi_plus(), from_vec(2, bells[1]))), 0.0, 1e-15);
    EXPECT_EQ(overlap(StateVector::basis(1, 0), StateVector::basis(1, 1)), Amplitude(0));
    EXPECT_THROW(overlap(phi_plus(), StateVector::basis(1, 0)), DimensionError);
}

TEST(Overlap, MatchesOracleAndIsConjugateLinearInFirstSlot) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::random_vec(rng, 4), b = oracle::random_vec(rng, 4);
        const Amplitude got = overlap(StateVector(2, a), StateVector(2, b));
        EXPECT_LT(std::abs(got - oracle::inner(a, b)), 1e-14);
        EXPECT_LE(std::abs(got), 1.0 + kTolerance);
    }
}

TEST(GlobalPhase, Examples) {
    const auto bells = oracle::bell_vectors();
    const StateVector psi_minus = from_vec(2, bells[3]);
    EXPECT_TRUE(equal_up_to_global_phase(psi_minus, psi_minus.with_phase(-1.0)));
    EXPECT_FALSE(equal_up_to_global_phase(phi_plus(), from_vec(2, bells[2])));
    EXPECT_TRUE(equal_up_to_global_phase(StateVector::basis(1, 0),
                                         StateVector::basis(1, 0).with_phase({0, 1})));
    EXPECT_THROW(equal_up_to_global_phase(phi_plus(), StateVector::basis(1, 0)), DimensionError);
    EXPECT_THROW(phi_plus().with_phase(2.0), ValidationError);
}

namespace {

std::vector<Matrix> computational_projectors(std::size_t n) {
    std::vector<Matrix> p;
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
        p.push_back(Matrix::outer(StateVector::basis(n, i), StateVector::basis(n, i)));
    }
    return p;
}

}  // namespace

TEST(Measure, EigenstateIsCertainAndDrawsNothing) {
    RandomSource rand(1);
    const auto p = computational_projectors(1);
    const Measurement m = measure_projective(StateVector::basis(1, 1), p, rand);
    EXPECT_EQ(m.outcome, 1u);
    EXPECT_DOUBLE_EQ(m.probability, 1.0);
    EXPECT_EQ(rand.draws(), 0u);
}

TEST(Measure, BellProjectorsOnInputTimesPhiPlusAreQuarter) {
    RandomSource rand(17);
    const auto proj = bell_projectors_ua();
    for (int trial = 0; trial < 25; ++trial) {
        const StateVector global = tensor(random_state(rand, 1), phi_plus());
        for (double p : outcome_probabilities(global, proj)) {
            EXPECT_NEAR(p, 0.25, 1e-12);
        }
    }
}

TEST(Measure, PhiPlusTimesZeroGivesCertainPhiPlus) {
    // Brute force: |<bell_k (x) |0>|global>|^2 summed over Bob's basis.
    const oracle::Vec global = oracle::kron(oracle::bell_vectors()[0], oracle::Vec{1, 0});
    const auto bells = oracle::bell_vectors();
    std::array<double, 4> expect{};
    for (int k = 0; k < 4; ++k) {
        for (int b = 0; b < 2; ++b) {
            oracle::Vec e(2);
            e[b] = 1;
            expect[k] += std::norm(oracle::inner(oracle::kron(bells[k], e), global));
        }
    }
    EXPECT_NEAR(expect[0], 1.0, 1e-15);

    RandomSource rand(0);
    const Measurement m = measure_projective(StateVector(3, global), bell_projectors_ua(), rand);
    EXPECT_EQ(m.outcome, 0u);
    EXPECT_NEAR(m.probability, 1.0, 1e-12);
    EXPECT_EQ(rand.draws(), 0u);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(outcome_probabilities(StateVector(3, global), bell_projectors_ua())[k],
                    expect[k], 1e-12);
    }
}

TEST(Measure, CompletenessAndCollapseNormalized) {
    RandomSource rand(8);
    const auto proj = computational_projectors(3);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector s = random_state(rand, 3);
        const auto probs = outcome_probabilities(s, proj);
        EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, kTolerance);
        const Measurement m = measure_projective(s, proj, rand);
        double n2 = 0;
        for (auto a : m.collapsed.amps()) n2 += std::norm(a);
        EXPECT_NEAR(n2, 1.0, kTolerance);
        EXPECT_NEAR(m.probability, probs[m.outcome], 1e-15);
    }
}

TEST(Measure, SamplingMatchesOracleDraw) {
    // Outcome k is chosen when the single uniform draw falls in
    // [sum_{j<k} p_j, sum_{j<=k} p_j).
    const double h = oracle::kInvSqrt2;
    const StateVector plus(1, {h, h});
    const auto proj = computational_projectors(1);
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        RandomSource rand(seed);
        const Measurement m = measure_projective(plus, proj, rand);
        EXPECT_EQ(m.outcome, oracle::first_uniform(seed) < 0.5 ? 0u : 1u) << "seed " << seed;
        EXPECT_EQ(rand.draws(), 1u);
    }
}

TEST(Measure, InvalidProjectorsRejected) {
    RandomSource rand(0);
    const StateVector s = StateVector::basis(1, 0);
    std::vector<Matrix> incomplete{Matrix::outer(s, s)};
    EXPECT_THROW(measure_projective(s, incomplete, rand), ValidationError);
    std::vector<Matrix> overlapping{Matrix::identity(2), Matrix::identity(2)};
    EXPECT_THROW(measure_projective(s, overlapping, rand), ValidationError);
    std::vector<Matrix> none;
    EXPECT_THROW(measure_projective(s, none, rand), ValidationError);
    std::vector<Matrix> wrong_dim{Matrix::identity(4)};
    EXPECT_THROW(measure_projective(s, wrong_dim, rand), DimensionError);
}

TEST(Measure, ProjectOntoImpossibleOutcomeRejected) {
    const auto proj = computational_projectors(1);
    EXPECT_THROW(project(StateVector::basis(1, 0), proj, 1), ValidationError);
    EXPECT_THROW(project(StateVector::basis(1, 0), proj, 2), IndexError);
}

TEST(QubitProbabilities, MarginalsMatchOracle) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = oracle::random_vec(rng, 8);
        const StateVector s(3, v);
        for (std::size_t q = 1; q <= 3; ++q) {
            double p1 = 0;
            for (std::size_t i = 0; i < 8; ++i) {
                if ((i >> (3 - q)) & 1u) p1 += std::norm(v[i]);
            }
            const auto got = qubit_probabilities(s, q);
            EXPECT_NEAR(got[1], p1, 1e-14);
            EXPECT_NEAR(got[0], 1.0 - p1, 1e-14);
        }
    }
    EXPECT_THROW(qubit_probabilities(phi_plus(), 3), IndexError);
}

TEST(RandomSource, DeterministicAndMatchesEngine) {
    RandomSource a(42), b(42);
    std::mt19937_64 e(42);
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        EXPECT_EQ(x, static_cast<double>(e() >> 11) / 9007199254740992.0);
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
    EXPECT_EQ(a.draws(), 1000u);
    EXPECT_EQ(a.seed(), 42u);
}

TEST(RandomSource, RandomStatesAreNormalizedAndSeeded) {
    RandomSource a(7), b(7);
    for (int i = 0; i < 50; ++i) {
        const StateVector x = random_state(a, 2);
        const StateVector y = random_state(b, 2);
        EXPECT_EQ(max_abs_diff(x.amps(), y.amps()), 0.0);
    }
}
