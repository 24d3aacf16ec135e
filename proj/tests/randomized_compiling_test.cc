// Copyright 2026 The lacc Authors
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
#include <numbers>

#include "lacc/circuit_ir/builders.h"
#include "lacc/frame_simulator/dense.h"
#include "lacc/frame_simulator/stabilizer_state.h"
#include "lacc/randomized_compiling/chi.h"
#include "lacc/randomized_compiling/magic_twirl.h"
#include "lacc/randomized_compiling/twirl.h"
#include "lacc/randomized_compiling/verify.h"
#include "test_util.h"

using namespace lacc;
using namespace lacc_test;

namespace {

// Random Clifford circuit mixing 1q layers, CZs and Clifford Pauli rotations.
LogicalCircuit random_clifford_circuit(size_t n, size_t blocks, Rng &rng, bool rotations = true) {
    LogicalCircuit c;
    c.n = n;
    std::vector<size_t> all(n);
    for (size_t q = 0; q < n; q++) all[q] = q;
    for (size_t b = 0; b < blocks; b++) {
        std::vector<Clifford1Q> g;
        for (size_t q = 0; q < n; q++) g.push_back(Clifford1Q::from_index((uint32_t)rng.below(24)));
        c.layers.push_back(GateLayer::single_qubit(g, LayerRole::Plain));
        std::vector<EntanglingOp> ops;
        if (!rotations || rng.coin()) {
            std::vector<size_t> order = all;
            rng.shuffle(order);
            for (size_t i = 0; i + 1 < n; i += 2) {
                ops.push_back(EntanglingOp::cz(std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1])));
            }
        } else {
            PauliString basis = random_pauli(n, all, rng);
            basis.set_sign(1);
            if (basis.is_identity()) basis.set(0, 'Z');
            RotationGate r{basis, (double)(1 + rng.below(3)) * std::numbers::pi / 2,
                           RotationMechanism::ProjectiveMeasurement};
            ops.push_back(EntanglingOp::rotation_op(r, false));
        }
        c.layers.push_back(GateLayer::entangling(ops, LayerRole::G));
    }
    c.layers.push_back(GateLayer::measurement(n));
    c.validate();
    return c;
}

size_t count_twirl_layers(const LogicalCircuit &c) {
    size_t k = 0;
    for (const auto &l : c.layers) k += l.kind == LayerKind::PauliTwirl;
    return k;
}

Mat dense_pauli_twirl_oracle(const DenseChannel &ch, const Mat &rho) {
    size_t n = ch.num_qubits();
    Mat out = Mat::Zero(rho.rows(), rho.cols());
    std::vector<size_t> support(n);
    for (size_t q = 0; q < n; q++) support[q] = q;
    uint64_t count = uint64_t{1} << (2 * n);
    for (uint64_t i = 0; i < count; i++) {
        Mat p = pauli_matrix(local_pauli(i, n));
        out += p * ch.apply(p * rho * p) * p;
    }
    return out / (double)count;
}

Mat random_density(size_t dim, Rng &rng) {
    Mat g(dim, dim);
    for (size_t i = 0; i < dim; i++)
        for (size_t j = 0; j < dim; j++) g(i, j) = cd(rng.normal(), rng.normal());
    Mat rho = g * g.adjoint();
    return rho / rho.trace();
}

}  // namespace

TEST(randomized_compiling, rotation_twirl_angle_examples) {
    PauliString z = PauliString::from_text("Z");
    PauliString x = PauliString::from_text("X");
    ASSERT_DOUBLE_EQ(rotation_twirl_angle(z, z, 0.3), 0.3);
    ASSERT_DOUBLE_EQ(rotation_twirl_angle(x, z, 0.3), -0.3);
    ASSERT_THROW(rotation_twirl_angle(x, PauliString::from_text("ZZ"), 0.3), std::invalid_argument);

    Rng rng = independent_test_rng();
    for (int trial = 0; trial < 200; trial++) {
        PauliString a = random_pauli(3, {0, 1, 2}, rng);
        PauliString b = random_pauli(3, {0, 1, 2}, rng);
        Mat ma = pauli_matrix(a), mb = pauli_matrix(b);
        bool anticommute = (ma * mb + mb * ma).norm() < 1e-9;
        ASSERT_DOUBLE_EQ(rotation_twirl_angle(a, b, 1.25), anticommute ? -1.25 : 1.25);
    }
    PauliString yx = PauliString::from_text("YX");
    PauliString zz = PauliString::from_text("ZZ");
    Mat m1 = pauli_matrix(yx), m2 = pauli_matrix(zz);
    double expect = (m1 * m2 - m2 * m1).norm() < 1e-9 ? 0.5 : -0.5;
    ASSERT_DOUBLE_EQ(rotation_twirl_angle(yx, zz, 0.5), expect);
}

TEST(randomized_compiling, twirled_rotation_gate_identity) {
    // R_B(s theta) after T equals T then R_B(theta), as unitaries up to phase.
    Rng rng = independent_test_rng();
    for (int trial = 0; trial < 50; trial++) {
        PauliString t = random_pauli(2, {0, 1}, rng);
        PauliString b = random_pauli(2, {0, 1}, rng);
        t.set_sign(1);
        b.set_sign(1);
        double theta = rng.uniform() * 3;
        Mat lhs = pauli_exp(b, rotation_twirl_angle(t, b, theta) / 2) * pauli_matrix(t);
        Mat rhs = pauli_matrix(t) * pauli_exp(b, theta / 2);
        ASSERT_LT((lhs - rhs).norm(), 1e-12);
    }
}

TEST(randomized_compiling, insert_twirls_preserves_clifford_logic) {
    Rng rng = independent_test_rng();
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng.below(6);
        LogicalCircuit c = random_clifford_circuit(n, 1 + rng.below(4), rng);
        auto [tw, rec] = insert_twirls(c, rng);
        tw.validate();
        ASSERT_EQ(count_twirl_layers(tw), c.layers.size() + 1);
        ASSERT_EQ(rec.boundaries.size(), c.layers.size() + 1);
        ASSERT_EQ(rec.compiled.size(), rec.boundaries.size());
        // Preparation twirl is Z-type.
        for (size_t q = 0; q < n; q++) ASSERT_FALSE(rec.boundaries[0].x(q));
        // Mask marks X or Y in the final twirl.
        for (size_t q = 0; q < n; q++) ASSERT_EQ(rec.mask[q], rec.boundaries.back().x(q) ? 1 : 0);

        CliffordTableau orig = c.tableau();
        CliffordTableau twirled = tw.tableau();
        CliffordTableau undo(n);
        undo.append_pauli(rec.boundaries.back());
        CliffordTableau fixed = twirled.then(undo);
        for (size_t q = 0; q < n; q++) {
            ASSERT_EQ(fixed.z_image(q), orig.z_image(q)) << trial;
            ASSERT_TRUE(fixed.x_image(q).same_operator(orig.x_image(q))) << trial;
        }
        // Stabilizer output statistics agree once the mask is undone.
        StabilizerState a(n), b(n);
        for (size_t li = 0; li + 1 < c.layers.size(); li++) a.apply_layer(c.layers[li]);
        for (size_t li = 0; li + 1 < tw.layers.size(); li++) b.apply_layer(tw.layers[li]);
        std::vector<int> ra = a.reference_bits(), rb = b.reference_bits();
        for (size_t q = 0; q < n; q++) {
            if (ra[q] < 0) {
                ASSERT_EQ(rb[q], -1);
            } else {
                ASSERT_EQ(rb[q] ^ (int)rec.mask[q], ra[q]);
            }
        }
    }
}

TEST(randomized_compiling, insert_twirls_preserves_non_clifford_distribution) {
    Rng rng = independent_test_rng();
    for (int trial = 0; trial < 20; trial++) {
        LogicalCircuit c;
        if (trial % 2 == 0) {
            c = build_iqp(2 + trial % 3, 3, rng);
        } else {
            c = build_trotter(heisenberg_chain(3, 1.0, 1.0, rng), 0.7, 2, {});
        }
        auto [tw, rec] = insert_twirls(c, rng);
        std::vector<double> p = exact_output_distribution(c, nullptr);
        std::vector<double> q = exact_output_distribution(tw, nullptr);
        ASSERT_EQ(p.size(), q.size());
        for (size_t s = 0; s < p.size(); s++) ASSERT_NEAR(p[s], q[s], 1e-10) << trial;
        for (const AngleSign &as : rec.angle_signs) {
            ASSERT_EQ(tw.layers[as.layer].kind, LayerKind::Entangling);
            ASSERT_EQ(tw.layers[as.layer - 1].kind, LayerKind::PauliTwirl);
        }
    }
}

TEST(randomized_compiling, rz_twirled_by_x_reverses_angle) {
    RotationGate r{PauliString::from_text("Z"), 0.4, RotationMechanism::ProjectiveMeasurement};
    LogicalCircuit c;
    c.n = 1;
    c.layers.push_back(GateLayer::identity(1, LayerRole::SPre));
    c.layers.push_back(GateLayer::entangling({EntanglingOp::rotation_op(r, true)}, LayerRole::G));
    c.layers.push_back(GateLayer::identity(1, LayerRole::SPost));
    c.layers.push_back(GateLayer::measurement(1));
    int seen = 0;
    for (uint64_t seed = 0; seed < 64; seed++) {
        Rng rng(seed);
        auto [tw, rec] = insert_twirls(c, rng);
        ASSERT_EQ(rec.angle_signs.size(), 1u);
        const PauliString &t = rec.boundaries[2];
        const AngleSign &as = rec.angle_signs[0];
        double angle = tw.layers[as.layer].ops[as.op].rotation.angle;
        if (t.x(0)) {
            ASSERT_EQ(as.sign, -1);
            ASSERT_DOUBLE_EQ(angle, -0.4);
            seen |= 1;
        } else {
            ASSERT_EQ(as.sign, 1);
            ASSERT_DOUBLE_EQ(angle, 0.4);
            seen |= 2;
        }
    }
    ASSERT_EQ(seen, 3);
}

TEST(randomized_compiling, compiled_layers_merge_undo_and_twirl) {
    Rng rng = independent_test_rng();
    // CZ-only, so every undo is a Clifford conjugate (rotations take an angle sign instead).
    LogicalCircuit c = random_clifford_circuit(4, 3, rng, false);
    auto [tw, rec] = insert_twirls(c, rng);
    // The first interior layer has nothing to undo.
    ASSERT_TRUE(rec.compiled[1].same_operator(rec.boundaries[1]));
    // Each later layer: undo = L T L^dag for the preceding gate layer.
    for (size_t j = 2; j < rec.compiled.size(); j++) {
        CliffordTableau t(4);
        append_layer(t, c.layers[j - 2]);
        PauliString undo = conjugate(t, rec.boundaries[j - 1]);
        PauliString expect = multiply(rec.boundaries[j], undo);
        ASSERT_TRUE(rec.compiled[j].same_operator(expect)) << j;
    }
    std::vector<uint8_t> bits{1, 0, 1, 1}, copy = bits;
    apply_mask(bits, rec.mask);
    apply_mask(bits, rec.mask);
    ASSERT_EQ(bits, copy);
}

TEST(randomized_compiling, twirl_random_channels_is_pauli_diagonal) {
    Rng rng = independent_test_rng();
    for (size_t n : {1, 1, 1, 2, 2, 3}) {
        DenseChannel ch = DenseChannel::random(n, 1 + rng.below(4), rng);
        ch.validate_cptp();
        ChiMatrix chi = twirl_channel(ch, pauli_group_matrices(n));
        ASSERT_LT(chi.max_offdiag(), 1e-10);
        ASSERT_NEAR(chi.diag_sum(), 1.0, 1e-9);
        for (Eigen::Index i = 0; i < chi.chi.rows(); i++) {
            ASSERT_GE(chi.chi(i, i).real(), -1e-12);
            ASSERT_NEAR(chi.chi(i, i).imag(), 0, 1e-12);
        }
        // Independent oracle: average the channel directly and compare actions.
        PauliChannel pc = chi.to_pauli_channel();
        size_t dim = size_t{1} << n;
        for (int k = 0; k < 3; k++) {
            Mat rho = random_density(dim, rng);
            Mat expect = dense_pauli_twirl_oracle(ch, rho);
            Mat got = Mat::Zero(dim, dim);
            for (uint64_t i = 0; i < pc.num_outcomes(); i++) {
                Mat p = pauli_matrix(local_pauli(i, n));
                got += pc.probability(i) * p * rho * p;
            }
            ASSERT_LT((got - expect).norm(), 1e-10);
        }
        // The untwirled channel is generally not diagonal.
        if (n == 1) ASSERT_GT(chi_matrix(ch).max_offdiag(), 1e-6);
    }
}

TEST(randomized_compiling, depolarizing_is_fixed_by_twirl) {
    std::vector<Mat> kraus;
    double p = 0.3;
    kraus.push_back(std::sqrt(1 - p) * pauli_1q('I'));
    for (char c : {'X', 'Y', 'Z'}) kraus.push_back(std::sqrt(p / 3) * pauli_1q(c));
    DenseChannel ch = DenseChannel::from_kraus(kraus);
    ChiMatrix before = chi_matrix(ch);
    ChiMatrix after = twirl_channel(ch, pauli_group_matrices(1));
    ASSERT_LT((before.chi - after.chi).norm(), 1e-12);
    ASSERT_NEAR(after.chi(0, 0).real(), 0.7, 1e-12);
    for (int i = 1; i < 4; i++) ASSERT_NEAR(after.chi(i, i).real(), 0.1, 1e-12);
}

TEST(randomized_compiling, coherent_z_rotation_becomes_stochastic_z) {
    double phi = 0.37;
    Mat u = pauli_exp(PauliString::from_text("Z"), phi / 2);
    ChiMatrix chi = twirl_channel(DenseChannel::from_unitary(u), pauli_group_matrices(1));
    ASSERT_LT(chi.max_offdiag(), 1e-12);
    // Local index: I=0, X=1, Z=2, Y=3.
    ASSERT_NEAR(chi.chi(0, 0).real(), std::pow(std::cos(phi / 2), 2), 1e-12);
    ASSERT_NEAR(chi.chi(2, 2).real(), std::pow(std::sin(phi / 2), 2), 1e-12);
    ASSERT_NEAR(chi.chi(1, 1).real(), 0, 1e-12);
    ASSERT_NEAR(chi.chi(3, 3).real(), 0, 1e-12);
    ASSERT_GT(chi_matrix(DenseChannel::from_unitary(u)).max_offdiag(), 0.1);
}

TEST(randomized_compiling, non_cptp_rejected) {
    ASSERT_THROW(twirl_channel(DenseChannel::from_unitary(2.0 * pauli_1q('X')), pauli_group_matrices(1)),
                 std::invalid_argument);
    Mat k(2, 2);
    k << 1, 0, 0, 0;
    ASSERT_THROW(twirl_channel(DenseChannel::from_kraus({k}), pauli_group_matrices(1)), std::invalid_argument);
    ASSERT_THROW(DenseChannel::from_unitary(Mat::Identity(16, 16)), std::invalid_argument);
}

TEST(randomized_compiling, magic_twirl_gate_sets) {
    Mat x = pauli_1q('X'), z = pauli_1q('Z');
    Mat s(2, 2);
    s << 1, 0, 0, cd(0, 1);
    Mat a = std::polar(1.0, -std::numbers::pi / 4) * s * x;
    ASSERT_LT((Mat(magic_twirl_gate(MagicStateKind::PiOver4)) - a).norm(), 1e-12);
    ASSERT_LT((Mat(magic_twirl_gate(MagicStateKind::PiOver2)) - z * x).norm(), 1e-12);
    ASSERT_LT((Mat(magic_twirl_gate(MagicStateKind::Pi)) - x).norm(), 1e-12);
    ASSERT_LT((Mat(magic_twirl_gate(MagicStateKind::Plus)) - x).norm(), 1e-12);
    Eigen::Vector2cd pi = ideal_magic_state(MagicStateKind::Pi);
    ASSERT_NEAR(std::abs(pi(0) + pi(1)), 0, 1e-12);
    for (auto k : {MagicStateKind::Plus, MagicStateKind::PiOver4, MagicStateKind::PiOver2, MagicStateKind::Pi}) {
        ASSERT_EQ(magic_state_kind_from_string(to_string(k)), k);
    }
}

TEST(randomized_compiling, twirl_magic_state_is_stochastic_z) {
    Rng rng = independent_test_rng();
    Mat z = pauli_1q('Z');
    for (auto k : {MagicStateKind::Plus, MagicStateKind::PiOver4, MagicStateKind::PiOver2, MagicStateKind::Pi}) {
        Eigen::Vector2cd v = ideal_magic_state(k);
        Mat ideal = v * v.adjoint();
        Eigen::Matrix2cd same = twirl_magic_state(ideal, k);
        ASSERT_LT((Mat(same) - ideal).norm(), 1e-12);
        for (int trial = 0; trial < 50; trial++) {
            Mat rho = random_density(2, rng);
            Eigen::Matrix2cd out = twirl_magic_state(rho, k);
            double eps = 1 - (v.adjoint() * rho * v).value().real();
            Mat expect = (1 - eps) * ideal + eps * z * ideal * z;
            ASSERT_LT((Mat(out) - expect).norm(), 1e-12);
            ASSERT_NEAR(magic_state_infidelity(out, k), eps, 1e-12);
            Eigen::Vector2cd w = z * v;
            ASSERT_LT(std::abs((v.adjoint() * out * w).value()), 1e-12);
        }
    }
    // Noisy |pi> from an X-axis over-rotation is diagonal in the {|pi>, Z|pi>} basis.
    Eigen::Vector2cd v = ideal_magic_state(MagicStateKind::Pi);
    Mat ux = pauli_exp(PauliString::from_text("Y"), 0.2);
    Mat noisy = ux * v * v.adjoint() * ux.adjoint();
    Eigen::Matrix2cd out = twirl_magic_state(noisy, MagicStateKind::Pi);
    ASSERT_LT(std::abs((v.adjoint() * out * (z * v)).value()), 1e-12);
    Mat bad(2, 2);
    bad << 1, 0, 0, 1;
    ASSERT_THROW(twirl_magic_state(bad, MagicStateKind::Pi), std::invalid_argument);
}

TEST(randomized_compiling, verifier_batches) {
    std::vector<TwirlCheck> pauli = verify_pauli_twirl(30, 2, 5);
    ASSERT_EQ(pauli.size(), 30u);
    for (const auto &c : pauli) {
        ASSERT_EQ(c.kind, "pauli");
        ASSERT_LT(c.max_offdiag, 1e-10);
        ASSERT_LT(c.diag_imag, 1e-10);
        ASSERT_LT(c.trace_error, 1e-9);
    }
    ASSERT_EQ(pauli[1].qubits, 2u);
    std::vector<TwirlCheck> magic = verify_magic_twirl(10, 5);
    ASSERT_EQ(magic.size(), 40u);
    for (const auto &c : magic) {
        ASSERT_LT(c.max_offdiag, 1e-12) << c.kind;
        ASSERT_LT(c.trace_error, 1e-12);
    }
    ASSERT_THROW(verify_pauli_twirl(1, 4, 0), std::invalid_argument);
}
