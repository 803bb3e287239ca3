#pragma once

// Minimal faithful representation dimension of a simply connected simple
// group, found as an exact minimum-weight set cover of the nonidentity center
// classes by irreducible highest-weight modules.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "liejordan/center.hpp"
#include "liejordan/rootdata.hpp"

namespace liejordan {

struct RdimResult {
    mpz_class total_dim;
    WeightSet witness;
    std::vector<mpz_class> per_weight_dims;
};

/// One candidate irreducible: its weight, dimension, and the bitmask of center
/// classes (in center_classes order) it acts on nontrivially.
struct CoverItem {
    DominantWeight weight;
    std::uint64_t dim = 0;
    std::uint32_t mask = 0;
};

/// Strict preference among weights used to break ties deterministically: the
/// larger coordinate at the earlier node wins, where D_l visits node l before
/// node l-1. Picks w1 over its dual for A and E6, and w_l for the spin nodes
/// of D.
bool weight_preferred(const RootDatum& datum, const DominantWeight& a, const DominantWeight& b);

/// Candidates with dim <= cap, one per distinct nonzero mask (the cheapest,
/// ties by weight_preferred), listed in weight_preferred order.
std::vector<CoverItem> cover_items(const RootDatum& datum, std::uint64_t cap,
                                   const Budget& budget = Budget{});

/// Exact minimum-weight cover of a universe of `universe` elements by bitmask DP.
/// Ties: fewest items, then the earliest items in the given order. Returns
/// indices into `items` in that order; throws std::logic_error if no cover exists.
std::vector<std::size_t> solve_cover(const std::vector<CoverItem>& items, std::size_t universe);

/// rdim with witness. Rank above budget.max_rank throws ResourceLimit.
RdimResult rdim(const RootDatum& datum, const Budget& budget = Budget{});

struct LemmaRow {
    SimpleType type;
    RdimResult result;
};

/// One row per valid type of rank <= max_rank; types computed concurrently,
/// rows in all_types() order.
std::vector<LemmaRow> lemma_table(int max_rank, const Budget& budget = Budget{});

/// rdim(datum) <= 2^l + 10.
bool verify_upb(const RootDatum& datum, const Budget& budget = Budget{});

}  // namespace liejordan
