#include "lnqec/channel_sim.hpp"

#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

namespace lnqec {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t mixer = master_seed ^ (stream_index * 0xD1B54A32D192ED03ull);
    state_ = splitmix64(mixer);
    state_ ^= splitmix64(mixer);
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

void NoiseModel::validate() const {
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(aux_pz) || !in_unit(data_px) || !in_unit(data_pz) || !in_unit(data_py)) {
        throw PreconditionViolated("NoiseModel: probabilities must lie in [0, 1]");
    }
    if (data_px + data_pz + data_py > 1.0 + 1e-12) {
        throw PreconditionViolated("NoiseModel: data error probabilities sum past 1");
    }
}

PauliError sample_error(const NoiseModel& model, const Segmentation& seg, RngStream& rng) {
    PauliError err = PauliError::identity(seg.total());
    for (std::size_t i = 0; i < seg.aux(); ++i) {
        if (rng.uniform() < model.aux_pz) err.e_z.set(i, true);
    }
    for (std::size_t j = 0; j < seg.data; ++j) {
        const double u = rng.uniform();
        const std::size_t q = seg.aux() + j;
        if (u < model.data_px) {
            err.e_x.set(q, true);
        } else if (u < model.data_px + model.data_pz) {
            err.e_z.set(q, true);
        } else if (u < model.data_px + model.data_pz + model.data_py) {
            err.e_x.set(q, true);
            err.e_z.set(q, true);
        }
    }
    return err;
}

TrialResult evaluate_error(const TracePcm& pcm, const QuatDecoder& decoder,
                           const PauliError& err) {
    TrialResult trial;
    trial.error = err;

    const FrameOutcome outcome = closed_form_outcome_quat(pcm, err);
    const BinVector syndrome = recover_syndrome(pcm, outcome);
    const QuatDecodeOutcome dec = decoder.decode(syndrome);
    if (!dec.ok) {
        trial.failure = FailureKind::decode_failure;
        return trial;
    }
    if (dec.word == assemble_error_word(err, pcm)) {
        trial.success = true;
    } else {
        trial.failure = FailureKind::miscorrection;
    }
    return trial;
}

TrialResult evaluate_error(const BinaryPairCode& pair, const BinDecoder& decoder0,
                           const BinDecoder& decoder1, const PauliError& err) {
    const Segmentation seg = segmentation_of(pair);
    TrialResult trial;
    trial.error = err;

    const FrameOutcome outcome = closed_form_outcome_bin(pair, err);
    const auto [s0, s1] = recover_syndromes(pair, outcome);
    const BinDecodeOutcome dec0 = decoder0.decode(s0);
    const BinDecodeOutcome dec1 = decoder1.decode(s1);
    if (!dec0.ok || !dec1.ok) {
        trial.failure = FailureKind::decode_failure;
        return trial;
    }
    const BinVector u0 = BinVector::concat(err.e_z_l0(seg), err.e_x_r(seg));
    const BinVector u1 = BinVector::concat(err.e_z_l1(seg), err.e_z_r(seg));
    if (dec0.word == u0 && dec1.word == u1) {
        trial.success = true;
    } else {
        trial.failure = FailureKind::miscorrection;
    }
    return trial;
}

TrialResult run_trial(const TracePcm& pcm, const QuatDecoder& decoder, const NoiseModel& model,
                      RngStream& rng) {
    return evaluate_error(pcm, decoder, sample_error(model, segmentation_of(pcm), rng));
}

TrialResult run_trial(const BinaryPairCode& pair, const BinDecoder& decoder0,
                      const BinDecoder& decoder1, const NoiseModel& model, RngStream& rng) {
    return evaluate_error(pair, decoder0, decoder1,
                          sample_error(model, segmentation_of(pair), rng));
}

std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials) {
    if (trials == 0) return {0.0, 0.0};
    const double z = 1.959963984540054;
    const double n = double(trials);
    const double p = double(failures) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // the bounds are exact at the extremes; don't let rounding leak past them
    const double low = failures == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = failures == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

namespace {

template <typename TrialFn>
MonteCarloReport run_monte_carlo(TrialFn&& trial_fn, std::uint64_t trials, std::uint64_t seed,
                                 std::size_t threads) {
    const auto start = std::chrono::steady_clock::now();
    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min<std::size_t>(threads, std::max<std::uint64_t>(1, trials));

    struct Counts {
        std::uint64_t miscorrections = 0;
        std::uint64_t decode_failures = 0;
    };
    std::vector<Counts> per_thread(threads);

    auto worker = [&](std::size_t tid) {
        Counts& counts = per_thread[tid];
        for (std::uint64_t i = tid; i < trials; i += threads) {
            RngStream rng(seed, i);
            const TrialResult trial = trial_fn(rng);
            if (trial.failure == FailureKind::miscorrection) ++counts.miscorrections;
            if (trial.failure == FailureKind::decode_failure) ++counts.decode_failures;
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    MonteCarloReport report;
    report.trials = trials;
    report.seed = seed;
    for (const Counts& c : per_thread) {
        report.miscorrections += c.miscorrections;
        report.decode_failures += c.decode_failures;
    }
    report.failures = report.miscorrections + report.decode_failures;
    report.rate = trials == 0 ? 0.0 : double(report.failures) / double(trials);
    std::tie(report.ci_low, report.ci_high) = wilson_interval(report.failures, trials);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

MonteCarloReport monte_carlo(const TracePcm& pcm, const QuatDecoder& decoder,
                             const NoiseModel& model, std::uint64_t trials, std::uint64_t seed,
                             std::size_t threads) {
    model.validate();
    return run_monte_carlo(
        [&](RngStream& rng) { return run_trial(pcm, decoder, model, rng); }, trials, seed, threads);
}

MonteCarloReport monte_carlo(const BinaryPairCode& pair, const BinDecoder& decoder0,
                             const BinDecoder& decoder1, const NoiseModel& model,
                             std::uint64_t trials, std::uint64_t seed, std::size_t threads) {
    model.validate();
    return run_monte_carlo(
        [&](RngStream& rng) { return run_trial(pair, decoder0, decoder1, model, rng); }, trials,
        seed, threads);
}

CompareReport asymmetric_compare(const BinaryPairCode& first, const BinDecoder& first_dec0,
                                 const BinDecoder& first_dec1, const BinaryPairCode& second,
                                 const BinDecoder& second_dec0, const BinDecoder& second_dec1,
                                 const NoiseModel& model, std::uint64_t trials,
                                 std::uint64_t seed, std::size_t threads) {
    if (first.k() != second.k()) {
        throw DimensionMismatch("asymmetric_compare: pairs protect different logical counts");
    }
    CompareReport report;
    report.first = monte_carlo(first, first_dec0, first_dec1, model, trials, seed, threads);
    report.second = monte_carlo(second, second_dec0, second_dec1, model, trials, seed, threads);
    report.first_params = parameter_summary(first);
    report.second_params = parameter_summary(second);
    return report;
}

}  // namespace lnqec
