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

#include <numbers>
#include <random>

#include "iclq/error.hpp"
#include "iclq/phase_space.hpp"
#include "oracle.hpp"

using namespace iclq;

namespace {

constexpr double kTight = 1e-12;

oracle::Mat dft_oracle() {
    // Row n, column R: exp(i * (2 pi n / 4) * R) / 2.
    oracle::Mat m(4, oracle::Vec(4));
    for (int n = 0; n < 4; ++n) {
        for (int r = 0; r < 4; ++r) {
            m[n][r] = std::polar(0.5, 2.0 * std::numbers::pi * n * r / 4.0);
        }
    }
    return m;
}

oracle::Mat to_mat(const Matrix& m) {
    oracle::Mat out(m.dim(), oracle::Vec(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m(r, c);
    return out;
}

double max_diff(const oracle::Mat& a, const oracle::Mat& b) {
    double d = 0;
    for (std::size_t r = 0; r < a.size(); ++r) d = std::max(d, oracle::max_diff(a[r], b[r]));
    return d;
}

}  // namespace

TEST(Dft4, MatchesExponentialFormula) {
    EXPECT_LT(max_diff(to_mat(dft4().matrix()), dft_oracle()), 1e-15);
}

TEST(Dft4, Entries) {
    const Unitary4 f = dft4();
    EXPECT_EQ(f(1, 1), Amplitude(0, 0.5));
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(f(0, c), Amplitude(0.5));
    EXPECT_EQ(dft4_inverse()(1, 1), Amplitude(0, -0.5));
}

TEST(Dft4, Unitary) {
    const Matrix f = dft4().matrix();
    EXPECT_LT(max_abs_diff(f * f.adjoint(), Matrix::identity(4)), kTight);
    EXPECT_LT(max_abs_diff(f * dft4_inverse().matrix(), Matrix::identity(4)), kTight);
}

TEST(Momentum, Values) {
    EXPECT_DOUBLE_EQ(Momentum(0).value(), 0.0);
    EXPECT_DOUBLE_EQ(Momentum(2).value(), std::numbers::pi);
    EXPECT_THROW(Momentum(4), ValidationError);
    EXPECT_THROW(Momentum(-1), ValidationError);
}

TEST(WannierToBloch, Rows) {
    const BlochQuartet q = wannier_to_bloch(wannier_basis());
    EXPECT_LT(max_abs_diff(q.at(Momentum(0)).amps(), oracle::Vec{0.5, 0.5, 0.5, 0.5}), 1e-15);
    EXPECT_LT(max_abs_diff(q.at(Momentum(2)).amps(), oracle::Vec{0.5, -0.5, 0.5, -0.5}), 1e-15);
    EXPECT_LT(max_abs_diff(q.at(Momentum(1)).amps(),
                           oracle::Vec{0.5, {0, 0.5}, -0.5, {0, -0.5}}),
              1e-15);
    EXPECT_NO_THROW(validate_orthonormal(q.states));
}

TEST(WannierToBloch, RejectsNonCanonicalInput) {
    Quartet q = wannier_basis();
    std::swap(q[0], q[1]);
    EXPECT_THROW(wannier_to_bloch(q), ValidationError);
}

TEST(BlochToWannier, RoundTrip) {
    const Quartet back = bloch_to_wannier(wannier_to_bloch(wannier_basis()));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LT(max_abs_diff(back[i].amps(), StateVector::basis(2, i).amps()), kTolerance);
    }
}

TEST(BlochToWannier, RejectsNonOrthonormal) {
    const double h = oracle::kInvSqrt2;
    BlochQuartet q{wannier_basis()};
    q.states[1] = StateVector(2, {h, h, 0, 0});
    EXPECT_THROW(bloch_to_wannier(q), ValidationError);
}

TEST(TransformQuartet, RandomQuartetInvertsAgainstMatrixInverse) {
    std::mt19937_64 rng(1234);
    const oracle::Mat f = dft_oracle();
    const oracle::Mat f_inv = oracle::inverse(f);
    for (int trial = 0; trial < 20; ++trial) {
        // Random orthonormal quartet via Gram-Schmidt.
        std::array<oracle::Vec, 4> cols;
        for (int k = 0; k < 4; ++k) {
            oracle::Vec v = oracle::random_vec(rng, 4);
            for (int j = 0; j < k; ++j) {
                const auto c = oracle::inner(cols[j], v);
                for (int i = 0; i < 4; ++i) v[i] -= c * cols[j][i];
            }
            cols[k] = oracle::normalize(v);
        }
        Quartet q{StateVector(2, cols[0]), StateVector(2, cols[1]), StateVector(2, cols[2]),
                  StateVector(2, cols[3])};
        const Quartet fwd = transform_quartet(q, dft4());
        // Row n of the output is sum_R F[n][R] * q[R].
        for (int n = 0; n < 4; ++n) {
            oracle::Vec want(4);
            for (int r = 0; r < 4; ++r)
                for (int i = 0; i < 4; ++i) want[i] += f[n][r] * cols[r][i];
            EXPECT_LT(max_abs_diff(fwd[n].amps(), want), 1e-14);
        }
        const Quartet back = transform_quartet(fwd, Unitary4(Matrix::from_rows(
                                                        {f_inv[0][0], f_inv[0][1], f_inv[0][2],
                                                         f_inv[0][3], f_inv[1][0], f_inv[1][1],
                                                         f_inv[1][2], f_inv[1][3], f_inv[2][0],
                                                         f_inv[2][1], f_inv[2][2], f_inv[2][3],
                                                         f_inv[3][0], f_inv[3][1], f_inv[3][2],
                                                         f_inv[3][3]})));
        for (int n = 0; n < 4; ++n) {
            EXPECT_LT(max_abs_diff(back[n].amps(), cols[n]), kTolerance);
        }
        const Quartet lib_back = bloch_to_wannier(BlochQuartet{fwd});
        for (int n = 0; n < 4; ++n) {
            EXPECT_LT(max_abs_diff(lib_back[n].amps(), cols[n]), kTolerance);
        }
    }
}

TEST(ContractBell, EvenAndOddSectors) {
    const auto bells = oracle::bell_vectors();
    const auto [pp, pm] = contract_bell(Sector::Even);
    EXPECT_EQ(pp.tag, BellTag::PhiPlus);
    EXPECT_EQ(pm.tag, BellTag::PhiMinus);
    EXPECT_LT(max_abs_diff(pp.state.amps(), bells[0]), kTight);
    EXPECT_LT(max_abs_diff(pm.state.amps(), bells[1]), kTight);
    const auto [sp, sm] = contract_bell(Sector::Odd);
    EXPECT_EQ(sp.tag, BellTag::PsiPlus);
    EXPECT_EQ(sm.tag, BellTag::PsiMinus);
    EXPECT_LT(max_abs_diff(sp.state.amps(), bells[2]), kTight);
    EXPECT_LT(max_abs_diff(sm.state.amps(), bells[3]), kTight);
}

TEST(ContractBell, OrthonormalAndSectorDisjoint) {
    for (std::size_t i = 0; i < 4; ++i) {
        const StateVector a = bell_state(kBellTags[i]);
        for (std::size_t j = 0; j < 4; ++j) {
            const Amplitude want = i == j ? 1.0 : 0.0;
            EXPECT_LT(std::abs(overlap(a, bell_state(kBellTags[j])) - want), kTight);
        }
        if (sector_of(kBellTags[i]) == Sector::Even) {
            EXPECT_EQ(a[1], Amplitude(0));
            EXPECT_EQ(a[2], Amplitude(0));
        } else {
            EXPECT_EQ(a[0], Amplitude(0));
            EXPECT_EQ(a[3], Amplitude(0));
        }
    }
}

TEST(HStates, Literals) {
    const double h = oracle::kInvSqrt2;
    const std::array<oracle::Vec, 6> want = {oracle::Vec{h, 0, h, 0},  oracle::Vec{h, 0, -h, 0},
                                             oracle::Vec{h, h, 0, 0},  oracle::Vec{h, -h, 0, 0},
                                             oracle::Vec{0, 0, h, h},  oracle::Vec{0, 0, h, -h}};
    const auto hs = h_states();
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(hs[i].tag, static_cast<HTag>(i));
        EXPECT_LT(max_abs_diff(hs[i].state.amps(), want[i]), kTight) << to_string(hs[i].tag);
        EXPECT_LT(std::abs(oracle::reshaped_det(want[i])), kTight);
        EXPECT_LT(std::abs(reshaped_determinant(hs[i].state)), kTight);
    }
}

TEST(Superpositions, AllTenHold) {
    const auto bell = bell_superpositions();
    const auto h = h_superpositions();
    ASSERT_EQ(bell.size(), 4u);
    ASSERT_EQ(h.size(), 6u);
    for (const auto* table : {&bell, &h}) {
        for (const auto& id : *table) {
            EXPECT_TRUE(id.holds) << id.lhs;
            EXPECT_LT(id.max_deviation, kTight) << id.lhs;
        }
    }
}

TEST(Superpositions, BellCombinationsAgainstLiteralVectors) {
    const auto b = oracle::bell_vectors();
    const double h = oracle::kInvSqrt2;
    auto combo = [&](int i, int j, double s) {
        oracle::Vec v(4);
        for (int k = 0; k < 4; ++k) v[k] = h * (b[i][k] + s * b[j][k]);
        return v;
    };
    EXPECT_LT(oracle::max_diff(combo(0, 1, 1), oracle::Vec{1, 0, 0, 0}), kTight);
    EXPECT_LT(oracle::max_diff(combo(0, 1, -1), oracle::Vec{0, 0, 0, 1}), kTight);
    EXPECT_LT(oracle::max_diff(combo(2, 3, 1), oracle::Vec{0, 1, 0, 0}), kTight);
    EXPECT_LT(oracle::max_diff(combo(2, 3, -1), oracle::Vec{0, 0, 1, 0}), kTight);
    const auto table = bell_superpositions();
    EXPECT_LT(max_abs_diff(table[0].expected.amps(), oracle::Vec{1, 0, 0, 0}), kTight);
    EXPECT_LT(max_abs_diff(table[1].expected.amps(), oracle::Vec{0, 0, 0, 1}), kTight);
    EXPECT_LT(max_abs_diff(table[3].expected.amps(), oracle::Vec{0, 0, 1, 0}), kTight);
}

TEST(ReshapedDeterminant, NeedsTwoQubits) {
    EXPECT_THROW(reshaped_determinant(StateVector::basis(1, 0)), DimensionError);
}
