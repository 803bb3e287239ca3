#pragma once

// Root-system combinatorics for the simple types A..G.
//
// Node numbering: A, B, C, D, G follow the usual chain conventions (B_l has
// its short simple root at node l, C_l its long one at node l, D_l has the
// spin nodes l-1 and l attached to node l-2, G_2 has node 1 short).  F_4 and
// the E series are numbered so that w1 is the smallest nontrivial module:
//
//   F4:  1 - 2 => 3 - 4        nodes 1, 2 short
//   En:  1 - 2 - ... - (n-1)   node n attached to node n-3
//
// Relative to Bourbaki this is F4: i -> 5-i, E6: (1,3,4,5,6,2) -> (1..6),
// E7: (7,6,5,4,3,1,2) -> (1..7), E8: (8,7,6,5,4,3,1,2) -> (1..8).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace liejordan {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(std::string_view text);

struct SimpleType {
    Family family;
    int rank;

    std::string name() const;
    auto operator<=>(const SimpleType&) const = default;
};

/// Validated constructor; throws InputError naming the violated rank constraint.
SimpleType make_type(Family family, int rank);

/// Every valid simple type of rank <= max_rank, exceptional types included,
/// ordered A, B, C, D, E, F, G and by rank within a family.
std::vector<SimpleType> all_types(int max_rank);

/// Size guards shared by the search operations.
struct Budget {
    int max_rank = 9;
    bool allow_large_cap = false;

    /// 2^max_rank + 10, the largest enumeration cap accepted without override.
    std::uint64_t default_cap() const;

    /// Defaults, with max_rank overridden by LIEJORDAN_MAX_RANK when set.
    static Budget from_env();
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using CorootVec = std::vector<std::uint32_t>;

/// Highest weight in the fundamental-weight basis: sum coords[i] * w_{i+1}.
struct DominantWeight {
    std::vector<std::uint32_t> coords;

    bool is_zero() const;
    std::size_t rank() const { return coords.size(); }
    std::string to_string() const;  // "w1+2w3", "0" for the zero weight

    static DominantWeight zero(int rank);
    /// w_index for 1-based index.
    static DominantWeight fundamental(int rank, int index);

    auto operator<=>(const DominantWeight&) const = default;
};

class RootDatum {
public:
    explicit RootDatum(SimpleType type);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }

    /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
    const IntMatrix& cartan() const { return cartan_; }

    /// Positive coroots in simple-coroot coordinates, sorted by height then
    /// lexicographically.
    const std::vector<CorootVec>& positive_coroots() const { return coroots_; }

    /// prod over positive coroots of <rho, beta^vee> (the Weyl denominator).
    const mpz_class& rho_product() const { return rho_product_; }

private:
    SimpleType type_;
    IntMatrix cartan_;
    std::vector<CorootVec> coroots_;
    mpz_class rho_product_;
};

RootDatum build_root_datum(SimpleType type);

/// Closed-form positive root count for the type.
std::size_t expected_positive_root_count(SimpleType type);

/// Exact determinant by fraction-free elimination.
mpz_class determinant(const IntMatrix& m);

/// Weyl's product formula as an unreduced quotient; canonicalized by the caller.
mpq_class weyl_dim_quotient(const RootDatum& datum, const DominantWeight& weight);

/// dim R(weight). Throws InputError on rank mismatch.
mpz_class weyl_dim(const RootDatum& datum, const DominantWeight& weight);

struct WeightDim {
    DominantWeight weight;
    mpz_class dim;
};

/// All nonzero dominant weights with weyl_dim <= cap, ordered by dimension
/// then coordinates. Caps above budget.default_cap() need allow_large_cap.
std::vector<WeightDim> enumerate_dominant_weights(const RootDatum& datum, std::uint64_t cap,
                                                  const Budget& budget = Budget{});

}  // namespace liejordan
