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

#include <random>

#include "iclq/error.hpp"
#include "iclq/icl.hpp"
#include "iclq/phase_space.hpp"
#include "oracle.hpp"
#include "state_mix.hpp"

using namespace iclq;

namespace {

bool is_bell(const IclClass& c, BellTag tag) {
    const auto* b = std::get_if<icl_class::Bell>(&c);
    return b && b->tag == tag;
}

}  // namespace

TEST(IclDiagram, Validation) {
    EXPECT_NO_THROW(IclDiagram(2, Sector::Even, 1));
    EXPECT_NO_THROW(IclDiagram(0, Sector::Even, -1));
    EXPECT_THROW(IclDiagram(3, Sector::Even, 1), ValidationError);
    EXPECT_THROW(IclDiagram(2, Sector::Odd, 1), ValidationError);
    EXPECT_THROW(IclDiagram(1, Sector::Odd, 0), ValidationError);
}

TEST(Classify, Examples) {
    const double h = oracle::kInvSqrt2;
    EXPECT_TRUE(is_bell(classify(StateVector(2, {h, 0, 0, h})), BellTag::PhiPlus));
    EXPECT_TRUE(std::holds_alternative<icl_class::Product>(classify(StateVector(2, {h, 0, h, 0}))));
    const double s5 = std::sqrt(5.0);
    const oracle::Vec confined{2 / s5, 0, 0, 1 / s5};
    EXPECT_GT(std::abs(oracle::reshaped_det(confined)), 1e-9);
    EXPECT_EQ(classify(StateVector(2, confined)), IclClass(icl_class::SectorConfined{Sector::Even}));
    EXPECT_EQ(classify(StateVector(2, {0, 2 / s5, 1 / s5, 0})),
              IclClass(icl_class::SectorConfined{Sector::Odd}));
    EXPECT_EQ(classify(StateVector(2, {0.5, 0.5, 0.5, -0.5})), IclClass(icl_class::Generic{}));
    EXPECT_EQ(classify(StateVector::basis(2, 0)), IclClass(icl_class::Product{}));
    EXPECT_THROW(classify(StateVector::basis(1, 0)), DimensionError);
}

TEST(Classify, BellExactlyOnCanonicalStatesUpToPhase) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    for (BellTag tag : kBellTags) {
        for (int i = 0; i < 10; ++i) {
            const StateVector s = bell_state(tag).with_phase(std::polar(1.0, angle(rng)));
            EXPECT_TRUE(is_bell(classify(s), tag));
        }
    }
}

TEST(Classify, ToString) {
    EXPECT_EQ(to_string(IclClass(icl_class::Bell{BellTag::PsiMinus})), "bell(psi-)");
    EXPECT_EQ(to_string(IclClass(icl_class::SectorConfined{Sector::Odd})), "sector-confined(odd)");
    EXPECT_EQ(to_string(IclClass(icl_class::Product{})), "product");
    EXPECT_EQ(to_string(IclClass(icl_class::Generic{})), "generic");
}

TEST(Classify, HStatesAreProducts) {
    for (const auto& hs : h_states()) {
        EXPECT_EQ(classify(hs.state), IclClass(icl_class::Product{})) << to_string(hs.tag);
    }
}

TEST(Classify, AgreesWithBruteForceOracle) {
    std::mt19937_64 rng(20240601);
    const auto states = state_mix::sample(rng, 1000);
    for (const auto& v : states) {
        int k = -1;
        const oracle::Klass want = oracle::classify(v, &k);
        EXPECT_TRUE(state_mix::same_class(classify(StateVector(2, v)), want, k));
    }
}

TEST(DiagramToState, Examples) {
    EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state({2, Sector::Even, 1}),
                                         bell_state(BellTag::PhiPlus)));
    EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state({1, Sector::Odd, 1}),
                                         bell_state(BellTag::PsiPlus)));
    EXPECT_EQ(max_abs_diff(diagram_to_state({4, Sector::Even, 1}).amps(),
                           diagram_to_state({2, Sector::Even, 1}).amps()),
              0.0);
    EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state({3, Sector::Odd, -1}),
                                         bell_state(BellTag::PsiMinus)));
}

TEST(ExtendSigmaX, Examples) {
    EXPECT_EQ(extend_sigma_x({2, Sector::Even, 1}), IclDiagram(3, Sector::Odd, 1));
    EXPECT_EQ(extend_sigma_x(extend_sigma_x({2, Sector::Even, 1})), IclDiagram(4, Sector::Even, 1));
    const IclDiagram d = extend_sigma_x({1, Sector::Odd, -1});
    EXPECT_EQ(d, IclDiagram(2, Sector::Even, -1));
    // sigma_x (x) I on the literal psi- vector.
    const auto b = oracle::bell_vectors();
    const oracle::Vec flipped = oracle::matvec(oracle::kron(oracle::pauli_x(), oracle::eye(2)), b[3]);
    EXPECT_NEAR(std::abs(oracle::inner(flipped, b[1])), 1.0, 1e-15);
    EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state(d), StateVector(2, flipped)));
}

TEST(ApplySigmaZ, Examples) {
    EXPECT_EQ(apply_sigma_z({2, Sector::Even, 1}), IclDiagram(2, Sector::Even, -1));
    EXPECT_EQ(apply_sigma_z({1, Sector::Odd, 1}), IclDiagram(1, Sector::Odd, -1));
    const IclDiagram d(5, Sector::Odd, -1);
    EXPECT_EQ(apply_sigma_z(apply_sigma_z(d)), d);
}

TEST(StateToDiagram, Examples) {
    EXPECT_EQ(state_to_diagram(BellTag::PhiMinus), IclDiagram(2, Sector::Even, -1));
    EXPECT_EQ(state_to_diagram(BellTag::PsiPlus), IclDiagram(1, Sector::Odd, 1));
    EXPECT_EQ(state_to_diagram(BellTag::PhiPlus, 6), IclDiagram(6, Sector::Even, 1));
    EXPECT_THROW(state_to_diagram(BellTag::PhiPlus, 5), ValidationError);
    EXPECT_THROW(state_to_diagram(BellTag::PsiMinus, 4), ValidationError);
}

TEST(IclLaws, ParityLaw) {
    IclDiagram d(2, Sector::Even, 1);
    for (std::uint64_t n = 0; n <= 16; ++n) {
        EXPECT_EQ(d.chain_length(), 2 + n);
        const BellTag want = n % 2 == 0 ? BellTag::PhiPlus : BellTag::PsiPlus;
        EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state(d), bell_state(want))) << n;
        d = extend_sigma_x(d);
    }
}

TEST(IclLaws, RoundTripAndCommutation) {
    for (BellTag tag : kBellTags) {
        for (std::uint64_t extra : {0u, 2u, 10u}) {
            const IclDiagram d0 = state_to_diagram(tag);
            const IclDiagram d(d0.chain_length() + extra, d0.sector(), d0.phase());
            EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state(d), bell_state(tag)));
            EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state(extend_sigma_x(d)),
                                                 apply_1q(diagram_to_state(d), gates::pauli_x(), 1)));
            EXPECT_TRUE(equal_up_to_global_phase(diagram_to_state(apply_sigma_z(d)),
                                                 apply_1q(diagram_to_state(d), gates::pauli_z(), 1)));
        }
    }
}

TEST(IclLaws, GateOnSecondQubitGivesSameTag) {
    for (BellTag tag : kBellTags) {
        const StateVector s = bell_state(tag);
        for (const Unitary2& g : {gates::pauli_x(), gates::pauli_z()}) {
            const IclClass a = classify(apply_1q(s, g, 1));
            const IclClass b = classify(apply_1q(s, g, 2));
            EXPECT_EQ(a, b);
        }
    }
}
