#include "lnqec/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <random>

namespace lnqec {

namespace {

// Qubit i <-> index bit (len - 1 - i).
std::uint64_t mask_from_bits(const BinVector& v) {
    std::uint64_t mask = 0;
    const std::size_t len = v.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (v.get(i)) mask |= std::uint64_t(1) << (len - 1 - i);
    }
    return mask;
}

BinVector bits_from_index(std::uint64_t idx, std::size_t len) {
    BinVector v(len);
    for (std::size_t i = 0; i < len; ++i) {
        if ((idx >> (len - 1 - i)) & 1) v.set(i, true);
    }
    return v;
}

int parity_sign(std::uint64_t masked) { return (std::popcount(masked) & 1) ? -1 : 1; }

void check_cap(std::size_t qubits, std::size_t cap) {
    if (qubits > cap) {
        throw CapExceeded("state vector would need " + std::to_string(qubits) +
                          " qubits, cap is " + std::to_string(cap));
    }
}

}  // namespace

StateVector StateVector::basis_state(std::size_t qubits, std::uint64_t index) {
    StateVector s(qubits);
    s.amplitudes[index] = 1.0;
    return s;
}

StateVector StateVector::random(std::size_t qubits, std::uint64_t seed) {
    StateVector s(qubits);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& a : s.amplitudes) a = {gauss(rng), gauss(rng)};
    s.normalize();
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

void StateVector::normalize() {
    const double n = norm();
    assert(n > 0.0);
    for (auto& a : amplitudes) a /= n;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.qubit_count != b.qubit_count) throw DimensionMismatch("fidelity: qubit counts differ");
    std::complex<double> ip = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        ip += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return std::abs(ip);
}

EncoderView encoder_view(const TracePcm& pcm) {
    return {&pcm.A, &pcm.A_inv, &pcm.N_Z, &pcm.N_X, pcm.aux_qubits(), pcm.data_qubits()};
}

EncoderView encoder_view(const BinaryPairCode& pair) {
    return {&pair.A, &pair.A_inv, &pair.N_Z, &pair.N_X, pair.aux_qubits(), pair.data_qubits()};
}

StateVector prepare_plus_aux(std::size_t aux_count, const StateVector& psi, std::size_t cap) {
    check_cap(aux_count + psi.qubit_count, cap);
    StateVector out(aux_count + psi.qubit_count);
    const std::size_t data_dim = std::size_t(1) << psi.qubit_count;
    const double scale = std::pow(0.5, double(aux_count) / 2.0);
    for (std::uint64_t va = 0; va < (std::uint64_t(1) << aux_count); ++va) {
        for (std::size_t d = 0; d < data_dim; ++d) {
            out.amplitudes[(va << psi.qubit_count) | d] = scale * psi.amplitudes[d];
        }
    }
    return out;
}

StateVector apply_encoder(const EncoderView& enc, const StateVector& state,
                          EncoderDirection direction) {
    if (state.qubit_count != enc.total_qubits()) {
        throw DimensionMismatch("apply_encoder: state has " + std::to_string(state.qubit_count) +
                                " qubits, encoder expects " + std::to_string(enc.total_qubits()));
    }
    const std::size_t k = enc.data_qubits;
    const std::size_t data_dim = std::size_t(1) << k;
    StateVector out(state.qubit_count);

    for (std::uint64_t va = 0; va < (std::uint64_t(1) << enc.aux_qubits); ++va) {
        const BinVector v = bits_from_index(va, enc.aux_qubits);
        const BinVector mu = enc.A_inv->vec_mul(v);
        const std::uint64_t x_mask = mask_from_bits(enc.N_X->vec_mul(mu));
        const std::uint64_t z_mask = mask_from_bits(enc.N_Z->vec_mul(mu));
        const std::uint64_t base = va << k;
        for (std::uint64_t d = 0; d < data_dim; ++d) {
            // Forward: X^x Z^z |d> = (-1)^(z.d) |d^x>; inverse uses Z^z X^x.
            const std::uint64_t controlled = direction == EncoderDirection::forward
                                                 ? (d & z_mask)
                                                 : ((d ^ x_mask) & z_mask);
            out.amplitudes[base | (d ^ x_mask)] =
                double(parity_sign(controlled)) * state.amplitudes[base | d];
        }
    }
    return out;
}

StateVector apply_pauli(const PauliError& err, const StateVector& state) {
    if (err.qubits() != state.qubit_count) {
        throw DimensionMismatch("apply_pauli: error and state sizes differ");
    }
    const std::uint64_t x_mask = mask_from_bits(err.e_x);
    const std::uint64_t z_mask = mask_from_bits(err.e_z);
    StateVector out(state.qubit_count);
    for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
        out.amplitudes[i ^ x_mask] = double(parity_sign(i & z_mask)) * state.amplitudes[i];
    }
    return out;
}

AuxMeasurement measure_aux_x_basis(const StateVector& state, std::size_t aux_count,
                                   double tolerance) {
    if (aux_count > state.qubit_count) {
        throw DimensionMismatch("measure_aux_x_basis: more auxiliary qubits than register holds");
    }
    const std::size_t data_qubits = state.qubit_count - aux_count;
    const std::size_t data_dim = std::size_t(1) << data_qubits;
    const std::size_t aux_dim = std::size_t(1) << aux_count;

    // Hadamard on every auxiliary qubit turns X-basis labels into
    // computational ones; the aux register must then hold a single label.
    std::vector<std::complex<double>> amps = state.amplitudes;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t q = 0; q < aux_count; ++q) {
        const std::uint64_t bit = std::uint64_t(1) << (state.qubit_count - 1 - q);
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            if (i & bit) continue;
            const auto a0 = amps[i];
            const auto a1 = amps[i | bit];
            amps[i] = inv_sqrt2 * (a0 + a1);
            amps[i | bit] = inv_sqrt2 * (a0 - a1);
        }
    }

    std::uint64_t best = 0;
    double best_mass = -1.0;
    double total_mass = 0.0;
    for (std::uint64_t va = 0; va < aux_dim; ++va) {
        double mass = 0.0;
        for (std::size_t d = 0; d < data_dim; ++d) mass += std::norm(amps[(va << data_qubits) | d]);
        total_mass += mass;
        if (mass > best_mass) {
            best_mass = mass;
            best = va;
        }
    }
    if (total_mass - best_mass > tolerance) {
        throw NotProductState("auxiliary register is not an X-basis product state (leakage " +
                              std::to_string(total_mass - best_mass) + ")");
    }

    AuxMeasurement result;
    result.outcome = bits_from_index(best, aux_count);
    result.data_state = StateVector(data_qubits);
    for (std::size_t d = 0; d < data_dim; ++d) {
        result.data_state.amplitudes[d] = amps[(best << data_qubits) | d];
    }
    result.data_state.normalize();
    return result;
}

StateVector predicted_state(const FrameOutcome& outcome, const StateVector& psi) {
    const std::size_t aux = outcome.aux_outcome.size();
    const std::size_t k = psi.qubit_count;
    if (outcome.residual_x.size() != k || outcome.residual_z.size() != k) {
        throw DimensionMismatch("predicted_state: residual length does not match psi");
    }
    const std::uint64_t b_mask = mask_from_bits(outcome.aux_outcome);
    const std::uint64_t rx_mask = mask_from_bits(outcome.residual_x);
    const std::uint64_t rz_mask = mask_from_bits(outcome.residual_z);

    StateVector out(aux + k);
    const double scale = std::pow(0.5, double(aux) / 2.0);
    const std::size_t data_dim = std::size_t(1) << k;
    for (std::uint64_t va = 0; va < (std::uint64_t(1) << aux); ++va) {
        const double aux_sign = parity_sign(va & b_mask);
        for (std::uint64_t d = 0; d < data_dim; ++d) {
            const double data_sign = parity_sign((d ^ rx_mask) & rz_mask);
            out.amplitudes[(va << k) | d] =
                scale * aux_sign * data_sign * psi.amplitudes[d ^ rx_mask];
        }
    }
    return out;
}

OracleCheck verify_closed_form_case(const EncoderView& enc, const PauliError& err,
                             const FrameOutcome& predicted, std::size_t psi_count,
                             std::uint64_t seed, std::size_t cap) {
    check_cap(enc.total_qubits(), cap);
    OracleCheck check;
    for (std::size_t trial = 0; trial < psi_count; ++trial) {
        const StateVector psi = StateVector::random(enc.data_qubits, seed + trial);
        StateVector state = prepare_plus_aux(enc.aux_qubits, psi, cap);
        state = apply_encoder(enc, state, EncoderDirection::forward);
        state = apply_pauli(err, state);
        state = apply_encoder(enc, state, EncoderDirection::inverse);

        const StateVector expect = predicted_state(predicted, psi);
        const double fid = fidelity(state, expect);
        check.min_fidelity = std::min(check.min_fidelity, fid);

        bool ok = fid >= 1.0 - kFidelityTolerance;
        try {
            const AuxMeasurement meas = measure_aux_x_basis(state, enc.aux_qubits);
            ok = ok && meas.outcome == predicted.aux_outcome;
        } catch (const NotProductState&) {
            ok = false;
        }
        ++check.trials;
        if (!ok) ++check.failures;
    }
    check.pass = check.failures == 0;
    return check;
}

namespace {

void merge(OracleCheck& into, const OracleCheck& part) {
    into.trials += part.trials;
    into.failures += part.failures;
    into.min_fidelity = std::min(into.min_fidelity, part.min_fidelity);
    into.pass = into.failures == 0;
}

}  // namespace

OracleCheck verify_closed_form_exhaustive(const TracePcm& pcm, std::size_t psi_count,
                                    std::uint64_t seed, std::size_t cap) {
    const EncoderView enc = encoder_view(pcm);
    check_cap(enc.total_qubits(), cap);
    const std::size_t total = enc.total_qubits();

    OracleCheck check;
    check.pass = true;
    std::uint64_t case_index = 0;
    for (std::uint64_t ex = 0; ex < (std::uint64_t(1) << total); ++ex) {
        for (std::uint64_t ez = 0; ez < (std::uint64_t(1) << total); ++ez) {
            const PauliError err{bits_from_index(ex, total), bits_from_index(ez, total)};
            const FrameOutcome predicted = closed_form_outcome_quat(pcm, err);
            merge(check, verify_closed_form_case(enc, err, predicted, psi_count,
                                           seed + 0x9E3779B9u * case_index, cap));
            ++case_index;
        }
    }
    return check;
}

OracleCheck verify_closed_form_exhaustive(const BinaryPairCode& pair, std::size_t psi_count,
                                    std::uint64_t seed, std::size_t cap) {
    const EncoderView enc = encoder_view(pair);
    check_cap(enc.total_qubits(), cap);
    const std::size_t total = enc.total_qubits();
    const std::size_t k = enc.data_qubits;

    OracleCheck check;
    check.pass = true;
    std::uint64_t case_index = 0;
    for (std::uint64_t exr = 0; exr < (std::uint64_t(1) << k); ++exr) {
        for (std::uint64_t ez = 0; ez < (std::uint64_t(1) << total); ++ez) {
            // exr's low bits land on the trailing (data) positions; the
            // auxiliary segment of e_X stays zero.
            const PauliError err{bits_from_index(exr, total), bits_from_index(ez, total)};
            const FrameOutcome predicted = closed_form_outcome_bin(pair, err);
            merge(check, verify_closed_form_case(enc, err, predicted, psi_count,
                                           seed + 0x9E3779B9u * case_index, cap));
            ++case_index;
        }
    }
    return check;
}

namespace {

BinVector random_bits(std::size_t len, std::mt19937_64& rng) {
    BinVector v(len);
    for (std::size_t i = 0; i < len; ++i) v.set(i, rng() & 1);
    return v;
}

}  // namespace

OracleCheck verify_closed_form_sampled(const TracePcm& pcm, std::size_t error_count,
                                 std::size_t psi_count, std::uint64_t seed, std::size_t cap) {
    const EncoderView enc = encoder_view(pcm);
    check_cap(enc.total_qubits(), cap);
    std::mt19937_64 rng(seed);

    OracleCheck check;
    check.pass = true;
    for (std::size_t i = 0; i < error_count; ++i) {
        const PauliError err{random_bits(enc.total_qubits(), rng),
                             random_bits(enc.total_qubits(), rng)};
        const FrameOutcome predicted = closed_form_outcome_quat(pcm, err);
        merge(check, verify_closed_form_case(enc, err, predicted, psi_count, rng(), cap));
    }
    return check;
}

OracleCheck verify_closed_form_sampled(const BinaryPairCode& pair, std::size_t error_count,
                                 std::size_t psi_count, std::uint64_t seed, std::size_t cap) {
    const EncoderView enc = encoder_view(pair);
    check_cap(enc.total_qubits(), cap);
    const Segmentation seg = segmentation_of(pair);
    std::mt19937_64 rng(seed);

    OracleCheck check;
    check.pass = true;
    for (std::size_t i = 0; i < error_count; ++i) {
        BinVector e_x(enc.total_qubits());
        const BinVector data_flips = random_bits(seg.data, rng);
        for (std::size_t j = 0; j < seg.data; ++j) e_x.set(seg.aux() + j, data_flips.get(j));
        const PauliError err{std::move(e_x), random_bits(enc.total_qubits(), rng)};
        const FrameOutcome predicted = closed_form_outcome_bin(pair, err);
        merge(check, verify_closed_form_case(enc, err, predicted, psi_count, rng(), cap));
    }
    return check;
}

}  // namespace lnqec
