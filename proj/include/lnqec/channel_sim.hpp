#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "lnqec/code_import.hpp"
#include "lnqec/pauli_frame.hpp"
#include "lnqec/syndrome_decode.hpp"

namespace lnqec {

/// Deterministic per-trial random stream: the state depends only on
/// (master seed, stream index), never on which worker runs the trial.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits; identical across platforms.
    double uniform();

  private:
    std::uint64_t state_;
};

/// Independent per-qubit Pauli noise. Auxiliary qubits only ever receive
/// phase errors; data qubits draw one of I/X/Z/Y per trial.
struct NoiseModel {
    double aux_pz = 0.0;
    double data_px = 0.0;
    double data_pz = 0.0;
    double data_py = 0.0;

    void validate() const;
    /// Depolarizing channel of total strength p on data, phase noise p on aux.
    static NoiseModel uniform(double aux_pz, double data_p) {
        return {aux_pz, data_p / 3.0, data_p / 3.0, data_p / 3.0};
    }
};

PauliError sample_error(const NoiseModel& model, const Segmentation& seg, RngStream& rng);

struct QuatDecodeOutcome {
    bool ok = false;
    GF4Vector word;
};

/// Decoder from trace syndromes to quaternary error words.
class QuatDecoder {
  public:
    virtual ~QuatDecoder() = default;
    virtual QuatDecodeOutcome decode(const BinVector& syndrome) const = 0;
};

class QuatTableDecoder final : public QuatDecoder {
  public:
    QuatTableDecoder(const TracePcm& pcm, std::size_t t,
                     std::size_t budget = kDefaultTableBudget)
        : table_(QuatSyndromeTable::build(pcm, t, budget)) {}

    QuatDecodeOutcome decode(const BinVector& syndrome) const override {
        auto word = table_.decode(syndrome);
        if (!word) return {};
        return {true, std::move(*word)};
    }

  private:
    QuatSyndromeTable table_;
};

struct BinDecodeOutcome {
    bool ok = false;
    BinVector word;
};

/// Decoder from binary syndromes to binary error words.
class BinDecoder {
  public:
    virtual ~BinDecoder() = default;
    virtual BinDecodeOutcome decode(const BinVector& syndrome) const = 0;
};

class BinTableDecoder final : public BinDecoder {
  public:
    BinTableDecoder(const BinMatrix& H, std::size_t t, std::size_t budget = kDefaultTableBudget)
        : table_(BinSyndromeTable::build(H, t, budget)) {}

    BinDecodeOutcome decode(const BinVector& syndrome) const override {
        auto word = table_.decode(syndrome);
        if (!word) return {};
        return {true, std::move(*word)};
    }

  private:
    BinSyndromeTable table_;
};

class SumProductBinDecoder final : public BinDecoder {
  public:
    SumProductBinDecoder(BinMatrix H, SumProductConfig cfg)
        : H_(std::move(H)), cfg_(std::move(cfg)) {}

    BinDecodeOutcome decode(const BinVector& syndrome) const override {
        SumProductResult res = sp_decode(H_, syndrome, cfg_);
        return {res.converged, std::move(res.estimate)};
    }

  private:
    BinMatrix H_;
    SumProductConfig cfg_;
};

enum class FailureKind { none, miscorrection, decode_failure };

struct TrialResult {
    PauliError error;
    bool success = false;
    FailureKind failure = FailureKind::none;
};

/// Closed form -> syndrome -> decode -> compare for a given error. Success
/// means the decoder identified the error exactly, auxiliary phase
/// components included.
TrialResult evaluate_error(const TracePcm& pcm, const QuatDecoder& decoder,
                           const PauliError& err);
TrialResult evaluate_error(const BinaryPairCode& pair, const BinDecoder& decoder0,
                           const BinDecoder& decoder1, const PauliError& err);

/// One sampled round of evaluate_error.
TrialResult run_trial(const TracePcm& pcm, const QuatDecoder& decoder, const NoiseModel& model,
                      RngStream& rng);
TrialResult run_trial(const BinaryPairCode& pair, const BinDecoder& decoder0,
                      const BinDecoder& decoder1, const NoiseModel& model, RngStream& rng);

struct MonteCarloReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t miscorrections = 0;
    std::uint64_t decode_failures = 0;
    double rate = 0.0;
    double ci_low = 0.0;   // Wilson 95%
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

/// 95% Wilson score interval for f failures out of n trials.
std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials);

MonteCarloReport monte_carlo(const TracePcm& pcm, const QuatDecoder& decoder,
                             const NoiseModel& model, std::uint64_t trials, std::uint64_t seed,
                             std::size_t threads = 0);
MonteCarloReport monte_carlo(const BinaryPairCode& pair, const BinDecoder& decoder0,
                             const BinDecoder& decoder1, const NoiseModel& model,
                             std::uint64_t trials, std::uint64_t seed, std::size_t threads = 0);

struct CompareReport {
    MonteCarloReport first;
    MonteCarloReport second;
    ParamSummary first_params;
    ParamSummary second_params;
};

/// Runs both pairs under the same noise model and seed so their logical
/// error rates and qubit counts can be weighed against each other.
CompareReport asymmetric_compare(const BinaryPairCode& first, const BinDecoder& first_dec0,
                                 const BinDecoder& first_dec1, const BinaryPairCode& second,
                                 const BinDecoder& second_dec0, const BinDecoder& second_dec1,
                                 const NoiseModel& model, std::uint64_t trials,
                                 std::uint64_t seed, std::size_t threads = 0);

}  // namespace lnqec
