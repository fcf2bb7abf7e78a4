#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "lnqec/bin_matrix.hpp"
#include "lnqec/code_import.hpp"
#include "lnqec/gf4.hpp"
#include "lnqec/pauli_frame.hpp"

namespace lnqec {

inline constexpr std::size_t kDefaultTableBudget = std::size_t(1) << 24;

/// Bounded-distance lookup table from trace syndromes to quaternary error
/// words of weight <= t. Syndromes of distinct stored words are guaranteed
/// distinct; a duplicate at build time means t was claimed too large.
class QuatSyndromeTable {
  public:
    static QuatSyndromeTable build(const TracePcm& pcm, std::size_t t,
                                   std::size_t budget = kDefaultTableBudget);

    /// The stored word for this syndrome; nullopt means more than t errors.
    std::optional<GF4Vector> decode(const BinVector& syndrome) const;

    std::size_t t() const { return t_; }
    std::size_t size() const { return table_.size(); }

  private:
    std::size_t t_ = 0;
    std::unordered_map<BinVector, GF4Vector, BinVectorHash> table_;
};

/// Bounded-distance table for a binary code: syndrome H e^T -> e with
/// wt(e) <= t.
class BinSyndromeTable {
  public:
    static BinSyndromeTable build(const BinMatrix& H, std::size_t t,
                                  std::size_t budget = kDefaultTableBudget);

    std::optional<BinVector> decode(const BinVector& syndrome) const;

    std::size_t t() const { return t_; }
    std::size_t size() const { return table_.size(); }

  private:
    std::size_t t_ = 0;
    std::unordered_map<BinVector, BinVector, BinVectorHash> table_;
};

struct SumProductConfig {
    std::size_t max_iterations = 50;
    /// Per-bit prior error probabilities; a single entry broadcasts to all
    /// bits. Values must lie strictly inside (0, 1).
    std::vector<double> prior = {0.05};
    bool early_stop = true;
    double llr_clamp = 25.0;
};

struct SumProductResult {
    BinVector estimate;
    bool converged = false;   // H * estimate^T == syndrome on exit
    std::size_t iterations = 0;
};

/// Syndrome-conditioned belief propagation on the Tanner graph of H.
/// Redundant rows in H are fine and often help. Ties (LLR exactly zero)
/// resolve to no-error.
SumProductResult sp_decode(const BinMatrix& H, const BinVector& syndrome,
                           const SumProductConfig& cfg = {});

/// Appends one bit per redundant row, each computed as the recorded linear
/// combination of base syndrome bits. Throws NoRedundantRows when the code
/// kept none.
BinVector extend_syndrome(const LinearCodeBin& code, const BinVector& base_syndrome);

}  // namespace lnqec
