#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lnqec/channel_sim.hpp"
#include "lnqec/code_import.hpp"
#include "lnqec/matrix_io.hpp"
#include "lnqec/statevec.hpp"
#include "lnqec/syndrome_decode.hpp"

using json = nlohmann::json;
using namespace lnqec;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240229;
constexpr std::size_t kCheapDistanceBudget = std::size_t(1) << 20;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::size_t qubit_cap_from_env(std::size_t flag_value) {
    if (flag_value != 0) return flag_value;
    if (const char* env = std::getenv("LNQEC_CAP")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultQubitCap;
}

std::optional<std::size_t> cheap_distance(const LinearCodeBin& code) {
    try {
        return min_distance(code, kCheapDistanceBudget);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::size_t> cheap_distance(const LinearCodeQuat& code) {
    try {
        return min_distance(code, kCheapDistanceBudget);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

LinearCodeBin load_bin_code(const std::string& path) {
    auto parsed = read_matrix_file(path, 2);
    auto code = import_binary(parsed.bin);
    code.d = cheap_distance(code);
    return code;
}

LinearCodeQuat load_quat_code(const std::string& path) {
    auto parsed = read_matrix_file(path, 4);
    auto code = import_quaternary(parsed.quat);
    code.d = cheap_distance(code);
    return code;
}

std::string perm_to_string(const std::vector<std::size_t>& perm) {
    std::string s = "[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(perm[i]);
    }
    return s + "]";
}

BinVector parse_bit_string(const std::string& bits) {
    BinVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("syndrome must be a string of 0s and 1s", 0);
        }
    }
    return v;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

struct NoiseFlags {
    double aux_pz = 0.0;
    double px = 0.0;
    double pz = 0.0;
    double py = 0.0;

    NoiseModel model() const {
        NoiseModel m{aux_pz, px, pz, py};
        m.validate();
        return m;
    }
};

double clamp_prior(double p) {
    const double floor = 1e-9;
    return std::min(std::max(p, floor), 1.0 - floor);
}

// Per-bit sum-product priors for one side of a binary pair: the auxiliary
// segment sees only phase noise, the data segment the matching flip rate.
std::vector<double> side_priors(std::size_t aux_bits, std::size_t data_bits, double aux_p,
                                double data_p) {
    std::vector<double> prior(aux_bits + data_bits);
    for (std::size_t i = 0; i < aux_bits; ++i) prior[i] = clamp_prior(aux_p);
    for (std::size_t i = 0; i < data_bits; ++i) prior[aux_bits + i] = clamp_prior(data_p);
    return prior;
}

// Sum-product over the full matrix (redundant rows stacked back on) fed with
// the extended syndrome, falling back to the plain matrix when none exist.
class ExtendedSumProductDecoder final : public BinDecoder {
  public:
    ExtendedSumProductDecoder(LinearCodeBin code, SumProductConfig cfg)
        : code_(std::move(code)), cfg_(std::move(cfg)),
          full_(code_.has_redundant_rows() ? BinMatrix::vstack(code_.H, code_.redundant_rows)
                                           : code_.H) {}

    BinDecodeOutcome decode(const BinVector& syndrome) const override {
        const BinVector s =
            code_.has_redundant_rows() ? extend_syndrome(code_, syndrome) : syndrome;
        SumProductResult res = sp_decode(full_, s, cfg_);
        return {res.converged, std::move(res.estimate)};
    }

  private:
    LinearCodeBin code_;
    SumProductConfig cfg_;
    BinMatrix full_;
};

// ---------------------------------------------------------------------------
// import

int cmd_import(const std::string& path, int field) {
    const auto parsed = read_matrix_file(path, field);
    if (parsed.field == 4) {
        const auto code = import_quaternary(parsed.quat);
        const auto d = cheap_distance(code);
        const auto params = quaternary_params(code.n, code.k, d);
        std::printf("n=%zu k=%zu aux=%zu physical=%zu\n", code.n, code.k, params.aux_qubits,
                    params.physical_qubits);
        std::printf("rank=%zu redundant=%zu perm=%s", code.n - code.k, code.redundant_rows.rows(),
                    perm_to_string(code.perm).c_str());
        if (d) std::printf(" d=%zu", *d);
        std::printf("\n");
    } else {
        const auto code = import_binary(parsed.bin);
        const auto d = cheap_distance(code);
        std::printf("n=%zu k=%zu\n", code.n, code.k);
        std::printf("rank=%zu redundant=%zu perm=%s", code.n - code.k, code.redundant_rows.rows(),
                    perm_to_string(code.perm).c_str());
        if (d) std::printf(" d=%zu", *d);
        std::printf("\n");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// table

void print_params(const std::string& name, const ParamSummary& p) {
    std::printf("%-28s physical=%zu logical=%zu aux=%zu", name.c_str(), p.physical_qubits,
                p.logical_qubits, p.aux_qubits);
    if (p.t0) std::printf(" t0=%zu", *p.t0);
    if (p.t1) std::printf(" t1=%zu", *p.t1);
    if (!p.is_pair && p.t0) std::printf(" t=%zu", *p.t0);
    std::printf("\n");
}

int cmd_table(const std::vector<std::string>& paths, int field, const std::string& pair_path,
              std::vector<std::size_t> d_override) {
    std::size_t d_idx = 0;
    auto next_d = [&]() -> std::optional<std::size_t> {
        if (d_idx < d_override.size()) return d_override[d_idx++];
        return std::nullopt;
    };

    if (!pair_path.empty()) {
        if (paths.size() != 1) {
            std::fprintf(stderr, "error: --pair expects exactly one positional path\n");
            return 2;
        }
        auto code0 = load_bin_code(paths[0]);
        auto code1 = load_bin_code(pair_path);
        if (auto d = next_d()) code0.d = d;
        if (auto d = next_d()) code1.d = d;
        const auto pair = build_binary_pair(code0, code1);
        print_params("pair(" + paths[0] + "," + pair_path + ")", parameter_summary(pair));
        return 0;
    }

    for (const auto& path : paths) {
        if (field == 4 || (field == 0 && read_matrix_file(path).field == 4)) {
            auto code = load_quat_code(path);
            if (auto d = next_d()) code.d = d;
            print_params(path, quaternary_params(code.n, code.k, code.d));
        } else {
            auto code = load_bin_code(path);
            if (auto d = next_d()) code.d = d;
            // a single binary code pairs with itself
            print_params(path, binary_pair_params(code.n, code.n, code.k, code.d, code.d));
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string path;
    std::string pair_path;
    int field = 0;
    std::size_t cap = 0;
    std::size_t psis = 5;
    std::size_t sampled_errors = 200;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::string out;
    bool corrupt_nz = false;  // falsification fixture: desync one N_Z bit
};

json run_verify_quat(const VerifyOptions& opt, std::size_t cap) {
    auto code = load_quat_code(opt.path);
    auto pcm = build_trace_pcm(code);
    if (opt.corrupt_nz && pcm.k > 0) {
        pcm.N_Z.set(0, 0, !pcm.N_Z.get(0, 0));
    }
    const std::size_t total = pcm.physical_qubits();
    if (total > cap) {
        throw CapExceeded("construction needs " + std::to_string(total) + " qubits, cap is " +
                          std::to_string(cap) + "; raise --cap or LNQEC_CAP, or use a smaller code");
    }

    json checks = json::array();
    bool all_pass = true;

    {
        // Q must be unitary regardless of the error model
        const EncoderView enc = encoder_view(pcm);
        bool pass = true;
        double worst = 1.0;
        for (int i = 0; i < 20; ++i) {
            StateVector s = StateVector::random(total, opt.seed + i);
            StateVector round = apply_encoder(enc, s, EncoderDirection::forward);
            round = apply_encoder(enc, round, EncoderDirection::inverse);
            const double fid = fidelity(round, s);
            worst = std::min(worst, fid);
            pass = pass && fid >= 1.0 - kFidelityTolerance;
        }
        checks.push_back({{"name", "encoder_unitarity"}, {"pass", pass}, {"min_fidelity", worst}});
        all_pass = all_pass && pass;
    }

    {
        const bool exhaustive = total <= 6;
        const OracleCheck check =
            exhaustive ? verify_closed_form_exhaustive(pcm, opt.psis, opt.seed, cap)
                       : verify_closed_form_sampled(pcm, opt.sampled_errors, opt.psis, opt.seed, cap);
        checks.push_back({{"name", exhaustive ? "closed_form_exhaustive" : "closed_form_sampled"},
                          {"pass", check.pass},
                          {"cases", check.trials},
                          {"failures", check.failures},
                          {"min_fidelity", check.min_fidelity}});
        all_pass = all_pass && check.pass;
    }

    return {{"construction", "quaternary"},
            {"path", opt.path},
            {"physical_qubits", total},
            {"pass", all_pass},
            {"seed", opt.seed},
            {"checks", checks}};
}

json run_verify_pair(const VerifyOptions& opt, std::size_t cap) {
    const auto pair = build_binary_pair(load_bin_code(opt.path), load_bin_code(opt.pair_path));
    const std::size_t total = pair.physical_qubits();
    if (total > cap) {
        throw CapExceeded("construction needs " + std::to_string(total) + " qubits, cap is " +
                          std::to_string(cap) + "; raise --cap or LNQEC_CAP, or use a smaller code");
    }

    json checks = json::array();
    const bool exhaustive = pair.data_qubits() + total <= 12;
    const OracleCheck check =
        exhaustive ? verify_closed_form_exhaustive(pair, opt.psis, opt.seed, cap)
                   : verify_closed_form_sampled(pair, opt.sampled_errors, opt.psis, opt.seed, cap);
    checks.push_back({{"name", exhaustive ? "closed_form_exhaustive" : "closed_form_sampled"},
                      {"pass", check.pass},
                      {"cases", check.trials},
                      {"failures", check.failures},
                      {"min_fidelity", check.min_fidelity}});

    return {{"construction", "binary_pair"},
            {"path", opt.path},
            {"pair", opt.pair_path},
            {"physical_qubits", total},
            {"pass", check.pass},
            {"seed", opt.seed},
            {"checks", checks}};
}

int cmd_verify(const VerifyOptions& opt) {
    const std::size_t cap = qubit_cap_from_env(opt.cap);
    const json report =
        opt.pair_path.empty() ? run_verify_quat(opt, cap) : run_verify_pair(opt, cap);

    if (opt.format == "json") {
        write_output(report.dump(2) + "\n", opt.out);
    } else {
        for (const auto& check : report["checks"]) {
            std::printf("%-28s %s", check["name"].get<std::string>().c_str(),
                        check["pass"].get<bool>() ? "pass" : "FAIL");
            if (check.contains("cases")) {
                std::printf("  cases=%llu",
                            static_cast<unsigned long long>(check["cases"].get<std::uint64_t>()));
            }
            std::printf("\n");
        }
    }
    const bool pass = report["pass"].get<bool>();
    std::printf("verify: %s (seed=%llu)\n", pass ? "all checks passed" : "CHECKS FAILED",
                static_cast<unsigned long long>(opt.seed));
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// decode

struct DecodeOptions {
    std::string path;
    int field = 0;
    std::string syndrome;
    std::size_t t = 0;
    bool t_set = false;
    std::string method = "table";
    double prior = 0.05;
    std::size_t max_iter = 50;
};

int cmd_decode(const DecodeOptions& opt) {
    const auto parsed = read_matrix_file(opt.path, opt.field);
    const BinVector syndrome = parse_bit_string(opt.syndrome);

    if (parsed.field == 4) {
        auto code = import_quaternary(parsed.quat);
        code.d = cheap_distance(code);
        const auto pcm = build_trace_pcm(code);
        std::size_t t = opt.t;
        if (!opt.t_set) {
            if (!code.d) throw PreconditionViolated("supply --t: distance unknown");
            t = (*code.d - 1) / 2;
        }
        if (syndrome.size() != 2 * (code.n - code.k)) {
            throw LengthMismatch("trace syndrome must have " +
                                 std::to_string(2 * (code.n - code.k)) + " bits");
        }
        const auto table = QuatSyndromeTable::build(pcm, t);
        const auto word = table.decode(syndrome);
        if (!word) {
            std::printf("DECODE_FAILURE\n");
            return 1;
        }
        std::printf("error=%s weight=%zu\n", word->to_string().c_str(), word->weight());
        return 0;
    }

    auto code = import_binary(parsed.bin);
    code.d = cheap_distance(code);
    if (syndrome.size() != code.H.rows()) {
        throw LengthMismatch("syndrome must have " + std::to_string(code.H.rows()) + " bits");
    }
    if (opt.method == "sp") {
        const ExtendedSumProductDecoder dec(code, {opt.max_iter, {opt.prior}, true, 25.0});
        const auto res = dec.decode(syndrome);
        if (!res.ok) {
            std::printf("DECODE_FAILURE\n");
            return 1;
        }
        std::printf("error=%s weight=%zu\n", res.word.to_string().c_str(), res.word.weight());
        return 0;
    }
    std::size_t t = opt.t;
    if (!opt.t_set) {
        if (!code.d) throw PreconditionViolated("supply --t: distance unknown");
        t = (*code.d - 1) / 2;
    }
    const auto table = BinSyndromeTable::build(code.H, t);
    const auto word = table.decode(syndrome);
    if (!word) {
        std::printf("DECODE_FAILURE\n");
        return 1;
    }
    std::printf("error=%s weight=%zu\n", word->to_string().c_str(), word->weight());
    return 0;
}

// ---------------------------------------------------------------------------
// simulate / compare

struct SimRow {
    std::string construction;
    std::size_t n, k, aux, physical;
    std::optional<std::size_t> t;
    NoiseModel model;
    MonteCarloReport report;
};

std::string csv_header() {
    return "construction,n,k,aux,physical,t,p_aux_z,p_x,p_z,p_y,trials,failures,rate,ci_low,ci_"
           "high,seed\n";
}

std::string csv_row(const SimRow& row) {
    std::ostringstream os;
    os << row.construction << ',' << row.n << ',' << row.k << ',' << row.aux << ','
       << row.physical << ',';
    if (row.t) os << *row.t;
    os << ',' << fmt_double(row.model.aux_pz) << ',' << fmt_double(row.model.data_px) << ','
       << fmt_double(row.model.data_pz) << ',' << fmt_double(row.model.data_py) << ','
       << row.report.trials << ',' << row.report.failures << ',' << fmt_double(row.report.rate)
       << ',' << fmt_double(row.report.ci_low) << ',' << fmt_double(row.report.ci_high) << ','
       << row.report.seed << '\n';
    return os.str();
}

json row_json(const SimRow& row) {
    json j = {{"construction", row.construction},
              {"n", row.n},
              {"k", row.k},
              {"aux", row.aux},
              {"physical", row.physical},
              {"noise",
               {{"aux_pz", row.model.aux_pz},
                {"p_x", row.model.data_px},
                {"p_z", row.model.data_pz},
                {"p_y", row.model.data_py}}},
              {"trials", row.report.trials},
              {"failures", row.report.failures},
              {"miscorrections", row.report.miscorrections},
              {"decode_failures", row.report.decode_failures},
              {"rate", row.report.rate},
              {"ci_low", row.report.ci_low},
              {"ci_high", row.report.ci_high},
              {"seed", row.report.seed},
              {"wall_seconds", row.report.wall_seconds}};
    if (row.t) j["t"] = *row.t;
    return j;
}

struct SimulateOptions {
    std::string path;
    std::string pair_path;
    int field = 0;
    std::size_t t = 0;
    bool t_set = false;
    std::uint64_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
    NoiseFlags noise;
    std::vector<double> sweep;
    std::string method = "table";
    double prior_scale = 1.0;
    std::size_t max_iter = 50;
    std::string format = "csv";
    std::string out;
    std::size_t threads = 0;
};

std::size_t resolve_t(bool t_set, std::size_t t_flag, const std::optional<std::size_t>& d,
                      const char* what) {
    if (t_set) return t_flag;
    if (!d) {
        throw PreconditionViolated(std::string("supply --t: distance of ") + what + " unknown");
    }
    return (*d - 1) / 2;
}

int cmd_simulate(const SimulateOptions& opt) {
    std::vector<NoiseModel> models;
    if (opt.sweep.empty()) {
        models.push_back(opt.noise.model());
    } else {
        for (double p : opt.sweep) {
            NoiseModel m = NoiseModel::uniform(p, p);
            m.validate();
            models.push_back(m);
        }
    }

    std::vector<SimRow> rows;

    if (opt.pair_path.empty()) {
        auto code = load_quat_code(opt.path);
        const auto pcm = build_trace_pcm(code);
        const std::size_t t = resolve_t(opt.t_set, opt.t, code.d, "the code");
        const QuatTableDecoder decoder(pcm, t);
        for (const auto& model : models) {
            SimRow row{"quaternary", pcm.n,  pcm.k, pcm.aux_qubits(), pcm.physical_qubits(),
                       t,            model, monte_carlo(pcm, decoder, model, opt.trials, opt.seed,
                                                        opt.threads)};
            rows.push_back(std::move(row));
        }
    } else {
        auto code0 = load_bin_code(opt.path);
        auto code1 = load_bin_code(opt.pair_path);
        const auto pair = build_binary_pair(code0, code1);
        const Segmentation seg = segmentation_of(pair);

        std::optional<std::size_t> t_report;
        std::unique_ptr<BinDecoder> dec0, dec1;
        if (opt.method == "sp") {
            // priors rebuilt per model below
        } else {
            const std::size_t t0 = resolve_t(opt.t_set, opt.t, code0.d, "code 0");
            const std::size_t t1 = resolve_t(opt.t_set, opt.t, code1.d, "code 1");
            t_report = std::min(t0, t1);
            dec0 = std::make_unique<BinTableDecoder>(pair.code0.H, t0);
            dec1 = std::make_unique<BinTableDecoder>(pair.code1.H, t1);
        }

        for (const auto& model : models) {
            if (opt.method == "sp") {
                SumProductConfig cfg0{opt.max_iter,
                                      side_priors(seg.aux0, seg.data, model.aux_pz,
                                                  model.data_px + model.data_py),
                                      true, 25.0};
                SumProductConfig cfg1{opt.max_iter,
                                      side_priors(seg.aux1, seg.data, model.aux_pz,
                                                  model.data_pz + model.data_py),
                                      true, 25.0};
                dec0 = std::make_unique<SumProductBinDecoder>(pair.code0.H, cfg0);
                dec1 = std::make_unique<SumProductBinDecoder>(pair.code1.H, cfg1);
            }
            SimRow row{"binary_pair",
                       pair.code0.n + pair.code1.n,
                       pair.k(),
                       pair.aux_qubits(),
                       pair.physical_qubits(),
                       t_report,
                       model,
                       monte_carlo(pair, *dec0, *dec1, model, opt.trials, opt.seed, opt.threads)};
            rows.push_back(std::move(row));
        }
    }

    for (const auto& row : rows) {
        std::printf("%s physical=%zu rate=%s ci=[%s,%s] failures=%llu/%llu seed=%llu\n",
                    row.construction.c_str(), row.physical,
                    fmt_double(row.report.rate).c_str(), fmt_double(row.report.ci_low).c_str(),
                    fmt_double(row.report.ci_high).c_str(),
                    static_cast<unsigned long long>(row.report.failures),
                    static_cast<unsigned long long>(row.report.trials),
                    static_cast<unsigned long long>(row.report.seed));
    }

    if (opt.format == "json") {
        json j = json::array();
        for (const auto& row : rows) j.push_back(row_json(row));
        write_output(j.dump(2) + "\n", opt.out);
    } else {
        std::string csv = csv_header();
        for (const auto& row : rows) csv += csv_row(row);
        write_output(csv, opt.out);
    }
    return 0;
}

struct CompareOptions {
    std::vector<std::string> paths;  // first0 first1 second0 second1
    std::size_t t = 0;
    bool t_set = false;
    std::uint64_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
    NoiseFlags noise;
    std::string format = "csv";
    std::string out;
    std::size_t threads = 0;
};

int cmd_compare(const CompareOptions& opt) {
    auto a0 = load_bin_code(opt.paths[0]);
    auto a1 = load_bin_code(opt.paths[1]);
    auto b0 = load_bin_code(opt.paths[2]);
    auto b1 = load_bin_code(opt.paths[3]);

    const auto first = build_binary_pair(a0, a1);
    const auto second = build_binary_pair(b0, b1);

    const BinTableDecoder fd0(first.code0.H, resolve_t(opt.t_set, opt.t, a0.d, "pair 1 code 0"));
    const BinTableDecoder fd1(first.code1.H, resolve_t(opt.t_set, opt.t, a1.d, "pair 1 code 1"));
    const BinTableDecoder sd0(second.code0.H, resolve_t(opt.t_set, opt.t, b0.d, "pair 2 code 0"));
    const BinTableDecoder sd1(second.code1.H, resolve_t(opt.t_set, opt.t, b1.d, "pair 2 code 1"));

    const NoiseModel model = opt.noise.model();
    const CompareReport cmp = asymmetric_compare(first, fd0, fd1, second, sd0, sd1, model,
                                                 opt.trials, opt.seed, opt.threads);

    auto make_row = [&](const char* name, const BinaryPairCode& pair, const ParamSummary& params,
                        const MonteCarloReport& report) {
        std::optional<std::size_t> t;
        if (params.t0 && params.t1) t = std::min(*params.t0, *params.t1);
        return SimRow{name,
                      pair.code0.n + pair.code1.n,
                      pair.k(),
                      params.aux_qubits,
                      params.physical_qubits,
                      t,
                      model,
                      report};
    };
    const SimRow rows[2] = {
        make_row("pair_1", first, cmp.first_params, cmp.first),
        make_row("pair_2", second, cmp.second_params, cmp.second),
    };

    for (const auto& row : rows) {
        std::printf("%s physical=%zu rate=%s ci=[%s,%s] failures=%llu/%llu seed=%llu\n",
                    row.construction.c_str(), row.physical, fmt_double(row.report.rate).c_str(),
                    fmt_double(row.report.ci_low).c_str(), fmt_double(row.report.ci_high).c_str(),
                    static_cast<unsigned long long>(row.report.failures),
                    static_cast<unsigned long long>(row.report.trials),
                    static_cast<unsigned long long>(row.report.seed));
    }

    if (opt.format == "json") {
        json j = json::array();
        for (const auto& row : rows) j.push_back(row_json(row));
        write_output(j.dump(2) + "\n", opt.out);
    } else {
        std::string csv = csv_header();
        for (const auto& row : rows) csv += csv_row(row);
        write_output(csv, opt.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum error correction from arbitrary parity-check matrices, "
                 "assisted by less noisy qubits"};
    app.require_subcommand(1);

    // import
    std::string im_path;
    int im_field = 0;
    auto* im = app.add_subcommand("import", "read a parity-check matrix and report code shape");
    im->add_option("path", im_path, "matrix file (.alist or plain text)")->required();
    im->add_option("--field", im_field, "expect GF(2) or GF(4)")->check(CLI::IsMember({2, 4}));

    // table
    std::vector<std::string> tb_paths;
    std::string tb_pair;
    int tb_field = 0;
    std::vector<std::size_t> tb_d;
    auto* tb = app.add_subcommand("table", "qubit accounting for codes or pairs");
    tb->add_option("paths", tb_paths, "matrix files")->required();
    tb->add_option("--pair", tb_pair, "second code of a binary pair");
    tb->add_option("--field", tb_field)->check(CLI::IsMember({2, 4}));
    tb->add_option("--d", tb_d, "externally supplied minimum distances");

    // verify
    VerifyOptions vo;
    auto* vf = app.add_subcommand("verify", "certify the closed-form decode against a state-"
                                            "vector simulation");
    vf->add_option("path", vo.path, "quaternary matrix, or first code of a pair")->required();
    vf->add_option("--pair", vo.pair_path, "second code of a binary pair");
    vf->add_option("--field", vo.field)->check(CLI::IsMember({2, 4}));
    vf->add_option("--cap", vo.cap, "qubit cap (default 14, or LNQEC_CAP)");
    vf->add_option("--psis", vo.psis, "random data states per error case");
    vf->add_option("--errors", vo.sampled_errors, "sampled error count for large codes");
    vf->add_option("--seed", vo.seed);
    vf->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
    vf->add_option("--out", vo.out, "write the report here instead of stdout");
    vf->add_flag("--corrupt-nz", vo.corrupt_nz,
                 "deliberately corrupt one N_Z bit (self-test of the oracle)");

    // decode
    DecodeOptions dc;
    auto* de = app.add_subcommand("decode", "decode one syndrome word");
    de->add_option("path", dc.path)->required();
    de->add_option("--field", dc.field)->check(CLI::IsMember({2, 4}));
    de->add_option("--syndrome", dc.syndrome, "syndrome bits, e.g. 1010")->required();
    de->add_option("--t", dc.t)->each([&dc](const std::string&) { dc.t_set = true; });
    de->add_option("--method", dc.method)->check(CLI::IsMember({"table", "sp"}));
    de->add_option("--prior", dc.prior, "sum-product channel prior");
    de->add_option("--max-iter", dc.max_iter);

    // simulate
    SimulateOptions so;
    auto* si = app.add_subcommand("simulate", "Monte Carlo logical error rate");
    si->add_option("path", so.path)->required();
    si->add_option("--pair", so.pair_path, "second code of a binary pair");
    si->add_option("--field", so.field)->check(CLI::IsMember({2, 4}));
    si->add_option("--t", so.t)->each([&so](const std::string&) { so.t_set = true; });
    si->add_option("--trials", so.trials);
    si->add_option("--seed", so.seed);
    si->add_option("--p-aux-z", so.noise.aux_pz, "phase error rate on auxiliary qubits");
    si->add_option("--p-x", so.noise.px, "data bit-flip rate");
    si->add_option("--p-z", so.noise.pz, "data phase-flip rate");
    si->add_option("--p-y", so.noise.py, "data Y rate");
    si->add_option("--sweep", so.sweep,
                   "depolarizing sweep: aux_pz = p and data I/X/Z/Y at p/3 per point")
        ->delimiter(',');
    si->add_option("--method", so.method)->check(CLI::IsMember({"table", "sp"}));
    si->add_option("--max-iter", so.max_iter);
    si->add_option("--format", so.format)->check(CLI::IsMember({"json", "csv"}));
    si->add_option("--out", so.out);
    si->add_option("--threads", so.threads, "worker count (0 = hardware)");

    // compare
    CompareOptions co;
    auto* cp = app.add_subcommand("compare", "two binary pairs under the same noise");
    cp->add_option("paths", co.paths, "pair1_code0 pair1_code1 pair2_code0 pair2_code1")
        ->expected(4);
    cp->add_option("--t", co.t)->each([&co](const std::string&) { co.t_set = true; });
    cp->add_option("--trials", co.trials);
    cp->add_option("--seed", co.seed);
    cp->add_option("--p-aux-z", co.noise.aux_pz);
    cp->add_option("--p-x", co.noise.px);
    cp->add_option("--p-z", co.noise.pz);
    cp->add_option("--p-y", co.noise.py);
    cp->add_option("--format", co.format)->check(CLI::IsMember({"json", "csv"}));
    cp->add_option("--out", co.out);
    cp->add_option("--threads", co.threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (im->parsed()) return cmd_import(im_path, im_field);
        if (tb->parsed()) return cmd_table(tb_paths, tb_field, tb_pair, tb_d);
        if (vf->parsed()) return cmd_verify(vo);
        if (de->parsed()) return cmd_decode(dc);
        if (si->parsed()) return cmd_simulate(so);
        if (cp->parsed()) return cmd_compare(co);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
