#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symmon/kernels.hpp"
#include "symmon/projector.hpp"

namespace symmon {

// One weight slice of the degree-one monogenics: the direct sum of the
// valid tri-components {(1-lambda; 1, 0), (-1-lambda; 0, 1)}. Ds maps the
// slice into the single component (-lambda; 0, 0), so the slice is
// Ds-invariantly defined and finite-dimensional.
struct Channel {
    int k = 1;
    int lambda = 0;
    std::vector<TriDegree> components;

    static Channel for_lambda(int lambda);
};

std::shared_ptr<const ComponentSpace> channel_space(int m, const Channel& ch);

// Exact dimension of ker Ds on the channel.
std::size_t monogenic_channel_dim(const OperatorCatalog& cat, int lambda,
                                  int jobs = 1);

// A candidate embedding factor R^ell * P_word * (simplicial seed).
// Words are sequences of positive-color labels with mu in {0, 2}; the word
// acts right-to-left (last letter first). The seed plus the word carry total
// (x,y)-degree one.
struct TowerGenerator {
    std::string tag;           // readable identity, e.g. "R^1 P(2,2) H(1,0,0)"
    TriDegree seed;            // (a,1,0) or (a,0,0)
    std::vector<Bigrade> word; // leftmost letter applied last
    int ell = 0;
};

// All weight-admissible generators for the channel, word length <= word_cap,
// in a fixed deterministic order. Seeds with zero simplicial space are
// included; they realize to dimension-0 families.
std::vector<TowerGenerator> enumerate_towers(int lambda, int word_cap);

struct RealizedTower {
    TowerGenerator generator;
    std::size_t seed_dim = 0;
    std::size_t dim = 0;       // rank of the realized family in the channel
    bool regularized = false;  // some projector step needed residue evaluation
    std::vector<std::string> singular_notes;
    std::vector<QVec> vectors; // independent spanning set, channel coordinates
};

// Realizes one tower: applies the word and R^ell to every seed basis vector,
// certifies each image against Ds exactly, and extracts an independent
// spanning set. Singular projector weights are handled by residue
// regularization and reported in singular_notes.
RealizedTower realize_tower(const OperatorCatalog& cat, const TowerGenerator& g,
                            std::shared_ptr<const ComponentSpace> channel,
                            int jobs = 1);

struct ChannelReport {
    int lambda = 0;
    std::size_t kernel_dim = 0;
    std::vector<RealizedTower> families;
    std::size_t sum_dims = 0;
    std::size_t union_rank = 0;
    bool complete = false;     // union rank == kernel dim
    bool independent = false;  // union rank == sum of family dims
    std::vector<std::string> singular; // all singular notes of the channel
};

ChannelReport verify_branching_channel(const OperatorCatalog& cat, int lambda,
                                       int word_cap, int jobs = 1);

struct BranchingReport {
    int m = 0;
    int lambda_lo = 0;
    int lambda_hi = 0;
    int word_cap = 2;
    std::vector<ChannelReport> channels;

    bool pass() const {
        for (const auto& ch : channels)
            if (!ch.complete || !ch.independent) return false;
        return true;
    }
    bool any_singular() const {
        for (const auto& ch : channels)
            if (!ch.singular.empty()) return true;
        return false;
    }
};

// Audits every channel lambda_lo..lambda_hi (inclusive, ascending output).
BranchingReport verify_branching_k1(const OperatorCatalog& cat, int lambda_lo,
                                    int lambda_hi, int word_cap, int jobs = 1);

// True when the tower unions for the two caps span the same subspace on
// every channel in the range.
bool word_cap_invariant(const OperatorCatalog& cat, int lambda_lo, int lambda_hi,
                        int cap_a, int cap_b, int jobs = 1);

} // namespace symmon
