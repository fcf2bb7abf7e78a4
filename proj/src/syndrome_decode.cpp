#include "lnqec/syndrome_decode.hpp"

#include <cmath>

namespace lnqec {

namespace {

// Number of weight<=t patterns: sum_w C(n,w) * (q-1)^w, saturating.
std::size_t pattern_count(std::size_t n, std::size_t t, std::size_t nonzero_values,
                          std::size_t limit) {
    std::size_t total = 0;
    long double binom = 1.0L;
    long double scale = 1.0L;
    for (std::size_t w = 0; w <= t; ++w) {
        if (w > 0) {
            binom = binom * (long double)(n - w + 1) / (long double)w;
            scale *= (long double)nonzero_values;
        }
        const long double term = binom * scale;
        if (term > (long double)limit || (total += (std::size_t)term) > limit) {
            return limit + 1;
        }
    }
    return total;
}

}  // namespace

QuatSyndromeTable QuatSyndromeTable::build(const TracePcm& pcm, std::size_t t,
                                           std::size_t budget) {
    if (pattern_count(pcm.n, t, 3, budget) > budget) {
        throw BudgetExceeded("syndrome table for t=" + std::to_string(t) + " over n=" +
                             std::to_string(pcm.n) + " exceeds the entry budget");
    }
    QuatSyndromeTable table;
    table.t_ = t;

    std::vector<std::size_t> support;
    std::vector<std::uint8_t> values;
    GF4Vector word(pcm.n);

    auto insert_current = [&]() {
        const BinVector syndrome = trace_syndrome(pcm, word);
        auto [it, inserted] = table.table_.emplace(syndrome, word);
        if (!inserted && it->second != word) {
            throw DistanceViolation("distinct words of weight <= " + std::to_string(t) +
                                    " share a trace syndrome; t is too large for this code");
        }
    };

    // weight 0
    insert_current();

    for (std::size_t w = 1; w <= t && w <= pcm.n; ++w) {
        support.assign(w, 0);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        bool more_supports = true;
        while (more_supports) {
            values.assign(w, 1);
            bool more_values = true;
            while (more_values) {
                for (std::size_t i = 0; i < w; ++i) word.set(support[i], GF4(values[i]));
                insert_current();
                for (std::size_t i = 0; i < w; ++i) word.set(support[i], gf4_zero);
                // next value pattern over {1, w, w2}
                std::size_t vi = w;
                more_values = false;
                while (vi > 0) {
                    --vi;
                    if (values[vi] < 3) {
                        ++values[vi];
                        for (std::size_t j = vi + 1; j < w; ++j) values[j] = 1;
                        more_values = true;
                        break;
                    }
                }
            }
            // next support
            more_supports = false;
            std::size_t si = w;
            while (si > 0) {
                --si;
                if (support[si] != si + pcm.n - w) {
                    ++support[si];
                    for (std::size_t j = si + 1; j < w; ++j) support[j] = support[j - 1] + 1;
                    more_supports = true;
                    break;
                }
            }
        }
    }
    return table;
}

std::optional<GF4Vector> QuatSyndromeTable::decode(const BinVector& syndrome) const {
    auto it = table_.find(syndrome);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

BinSyndromeTable BinSyndromeTable::build(const BinMatrix& H, std::size_t t, std::size_t budget) {
    const std::size_t n = H.cols();
    if (pattern_count(n, t, 1, budget) > budget) {
        throw BudgetExceeded("syndrome table for t=" + std::to_string(t) + " over n=" +
                             std::to_string(n) + " exceeds the entry budget");
    }
    BinSyndromeTable table;
    table.t_ = t;

    BinVector word(n);
    auto insert_current = [&]() {
        const BinVector syndrome = H.mul_vec(word);
        auto [it, inserted] = table.table_.emplace(syndrome, word);
        if (!inserted && it->second != word) {
            throw DistanceViolation("distinct words of weight <= " + std::to_string(t) +
                                    " share a syndrome; t is too large for this code");
        }
    };

    insert_current();
    std::vector<std::size_t> support;
    for (std::size_t w = 1; w <= t && w <= n; ++w) {
        support.assign(w, 0);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        bool more = true;
        while (more) {
            for (std::size_t i = 0; i < w; ++i) word.set(support[i], true);
            insert_current();
            for (std::size_t i = 0; i < w; ++i) word.set(support[i], false);
            more = false;
            std::size_t si = w;
            while (si > 0) {
                --si;
                if (support[si] != si + n - w) {
                    ++support[si];
                    for (std::size_t j = si + 1; j < w; ++j) support[j] = support[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return table;
}

std::optional<BinVector> BinSyndromeTable::decode(const BinVector& syndrome) const {
    auto it = table_.find(syndrome);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

SumProductResult sp_decode(const BinMatrix& H, const BinVector& syndrome,
                           const SumProductConfig& cfg) {
    const std::size_t m = H.rows();
    const std::size_t n = H.cols();
    if (syndrome.size() != m) throw LengthMismatch("sp_decode: syndrome length mismatch");
    if (cfg.max_iterations < 1) throw PreconditionViolated("sp_decode: max_iterations must be >= 1");
    if (cfg.prior.empty()) throw PreconditionViolated("sp_decode: missing channel priors");
    for (double p : cfg.prior) {
        if (!(p > 0.0 && p < 1.0)) {
            throw PreconditionViolated("sp_decode: priors must lie strictly inside (0, 1)");
        }
    }

    auto prior_of = [&](std::size_t v) {
        return cfg.prior.size() == 1 ? cfg.prior[0] : cfg.prior.at(v);
    };
    auto clamp = [&](double x) {
        if (x > cfg.llr_clamp) return cfg.llr_clamp;
        if (x < -cfg.llr_clamp) return -cfg.llr_clamp;
        return x;
    };

    // Edge lists of the Tanner graph; edges are numbered row by row.
    std::vector<std::vector<std::size_t>> check_vars(m);
    std::vector<std::vector<std::size_t>> check_edges(m);
    std::size_t edge_count = 0;
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t v = 0; v < n; ++v) {
            if (H.get(c, v)) {
                check_vars[c].push_back(v);
                check_edges[c].push_back(edge_count);
                ++edge_count;
            }
        }
    }

    // Check-serial (layered) schedule: each check reads the freshest
    // posteriors, updates its outgoing messages, and folds them back in.
    std::vector<double> posterior(n);
    for (std::size_t v = 0; v < n; ++v) {
        posterior[v] = clamp(std::log((1.0 - prior_of(v)) / prior_of(v)));
    }
    std::vector<double> check_to_var(edge_count, 0.0);

    SumProductResult result;

    auto hard_decision = [&]() {
        BinVector est(n);
        for (std::size_t v = 0; v < n; ++v) {
            if (posterior[v] < 0.0) est.set(v, true);
        }
        return est;
    };

    std::vector<double> th, prefix, suffix;
    for (std::size_t iter = 1; iter <= cfg.max_iterations; ++iter) {
        for (std::size_t c = 0; c < m; ++c) {
            const auto& vars = check_vars[c];
            const auto& edges = check_edges[c];
            const std::size_t deg = vars.size();
            if (deg == 0) continue;

            th.resize(deg);
            for (std::size_t i = 0; i < deg; ++i) {
                th[i] = std::tanh(clamp(posterior[vars[i]] - check_to_var[edges[i]]) / 2.0);
            }
            prefix.assign(deg + 1, 1.0);
            suffix.assign(deg + 1, 1.0);
            for (std::size_t i = 0; i < deg; ++i) prefix[i + 1] = prefix[i] * th[i];
            for (std::size_t i = deg; i > 0; --i) suffix[i - 1] = suffix[i] * th[i - 1];

            const double sign = syndrome.get(c) ? -1.0 : 1.0;
            for (std::size_t i = 0; i < deg; ++i) {
                double prod = sign * prefix[i] * suffix[i + 1];
                if (prod > 1.0 - 1e-15) prod = 1.0 - 1e-15;
                if (prod < -1.0 + 1e-15) prod = -1.0 + 1e-15;
                const double fresh = clamp(2.0 * std::atanh(prod));
                posterior[vars[i]] += fresh - check_to_var[edges[i]];
                check_to_var[edges[i]] = fresh;
            }
        }

        result.iterations = iter;
        if (cfg.early_stop) {
            BinVector est = hard_decision();
            if (H.mul_vec(est) == syndrome) {
                result.estimate = std::move(est);
                result.converged = true;
                return result;
            }
        }
    }

    result.estimate = hard_decision();
    result.converged = H.mul_vec(result.estimate) == syndrome;
    return result;
}

BinVector extend_syndrome(const LinearCodeBin& code, const BinVector& base_syndrome) {
    if (!code.has_redundant_rows()) {
        throw NoRedundantRows("extend_syndrome: code kept no redundant rows");
    }
    if (base_syndrome.size() != code.H.rows()) {
        throw LengthMismatch("extend_syndrome: base syndrome length mismatch");
    }
    BinVector extra(code.redundant_rows.rows());
    for (std::size_t j = 0; j < extra.size(); ++j) {
        extra.set(j, code.redundant_combos.row(j).dot(base_syndrome));
    }
    return BinVector::concat(base_syndrome, extra);
}

}  // namespace lnqec
