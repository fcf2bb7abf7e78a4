#include "lnqec/pauli_frame.hpp"

namespace lnqec {

Segmentation segmentation_of(const TracePcm& pcm) {
    return {pcm.n - pcm.k, pcm.n - pcm.k, pcm.k};
}

Segmentation segmentation_of(const BinaryPairCode& pair) {
    return {pair.code0.n - pair.code0.k, pair.code1.n - pair.code1.k, pair.k()};
}

PauliError::PauliError(BinVector x, BinVector z) : e_x(std::move(x)), e_z(std::move(z)) {
    if (e_x.size() != e_z.size()) throw LengthMismatch("PauliError: e_x and e_z lengths differ");
}

GF4Vector assemble_error_word(const PauliError& err, const TracePcm& pcm) {
    const Segmentation seg = segmentation_of(pcm);
    if (err.qubits() != seg.total()) {
        throw LengthMismatch("assemble_error_word: error length " + std::to_string(err.qubits()) +
                             ", construction has " + std::to_string(seg.total()) + " qubits");
    }
    // e = w2 * u + v with u = (e_Zl0, e_Xr), v = (e_Zl1, e_Zr); since
    // w2 = 1 + w this is z plane u + v, x plane u.
    const BinVector u = BinVector::concat(err.e_z_l0(seg), err.e_x_r(seg));
    const BinVector v = BinVector::concat(err.e_z_l1(seg), err.e_z_r(seg));
    return {u ^ v, u};
}

PauliError disassemble_error_word(const GF4Vector& e, const TracePcm& pcm) {
    const Segmentation seg = segmentation_of(pcm);
    if (e.size() != pcm.n) {
        throw LengthMismatch("disassemble_error_word: word length mismatch");
    }
    const BinVector u = e.trace_vec();        // (e_Zl0, e_Xr)
    const BinVector v = e.trace_omega_vec();  // (e_Zl1, e_Zr)
    const std::size_t r = pcm.n - pcm.k;

    BinVector e_x(seg.total());
    BinVector e_z(seg.total());
    for (std::size_t i = 0; i < r; ++i) {
        e_z.set(i, u.get(i));
        e_z.set(r + i, v.get(i));
    }
    for (std::size_t j = 0; j < pcm.k; ++j) {
        e_x.set(seg.aux() + j, u.get(r + j));
        e_z.set(seg.aux() + j, v.get(r + j));
    }
    return {std::move(e_x), std::move(e_z)};
}

BinVector trace_syndrome(const TracePcm& pcm, const GF4Vector& e) {
    if (e.size() != pcm.n) throw LengthMismatch("trace_syndrome: word length mismatch");
    return pcm.H_Z.mul_vec(e.trace_vec()) ^ pcm.H_X.mul_vec(e.trace_omega_vec());
}

BinVector trace_syndrome_direct(const TracePcm& pcm, const GF4Vector& e) {
    if (e.size() != pcm.n) throw LengthMismatch("trace_syndrome_direct: word length mismatch");
    return pcm.H_Q.mul_vec(e).trace_vec();
}

FrameOutcome closed_form_outcome_quat(const TracePcm& pcm, const PauliError& err) {
    const Segmentation seg = segmentation_of(pcm);
    if (err.qubits() != seg.total()) {
        throw LengthMismatch("closed_form_outcome_quat: error length mismatch");
    }
    const GF4Vector e = assemble_error_word(err, pcm);
    const BinVector syndrome = trace_syndrome(pcm, e);

    const BinVector mu = pcm.A_inv.vec_mul(err.e_x_l(seg));  // e_Xl A^-1
    const BinVector mu_nx = pcm.N_X.vec_mul(mu);
    const BinVector mu_nz = pcm.N_Z.vec_mul(mu);

    FrameOutcome out;
    out.aux_outcome = pcm.A_inv.mul_vec(syndrome ^ pcm.N_Z.mul_vec(mu_nx));
    out.residual_x = mu_nx ^ err.e_x_r(seg);
    out.residual_z = mu_nz ^ err.e_z_r(seg);
    return out;
}

FrameOutcome closed_form_outcome_bin(const BinaryPairCode& pair, const PauliError& err) {
    const Segmentation seg = segmentation_of(pair);
    if (err.qubits() != seg.total()) {
        throw LengthMismatch("closed_form_outcome_bin: error length mismatch");
    }
    if (!err.aux_bit_flip_free(seg)) {
        throw PreconditionViolated(
            "closed_form_outcome_bin: bit flips on auxiliary qubits are outside the closed form");
    }

    const BinVector u0 = BinVector::concat(err.e_z_l0(seg), err.e_x_r(seg));
    const BinVector u1 = BinVector::concat(err.e_z_l1(seg), err.e_z_r(seg));

    FrameOutcome out;
    out.aux_outcome = BinVector::concat(pair.A_Z_inv.mul_vec(pair.code0.H.mul_vec(u0)),
                                        pair.A_X_inv.mul_vec(pair.code1.H.mul_vec(u1)));
    out.residual_x = err.e_x_r(seg);
    out.residual_z = err.e_z_r(seg);
    return out;
}

BinVector recover_syndrome(const TracePcm& pcm, const FrameOutcome& outcome) {
    return pcm.A.mul_vec(outcome.aux_outcome);
}

std::pair<BinVector, BinVector> recover_syndromes(const BinaryPairCode& pair,
                                                  const FrameOutcome& outcome) {
    // A is block diagonal, so A * aux splits into the two per-code syndromes.
    const std::size_t r0 = pair.code0.n - pair.code0.k;
    const std::size_t r1 = pair.code1.n - pair.code1.k;
    const BinVector s = pair.A.mul_vec(outcome.aux_outcome);
    return {s.slice(0, r0), s.slice(r0, r1)};
}

}  // namespace lnqec
