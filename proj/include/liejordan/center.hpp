#pragma once

// Center of the simply connected group as coweight lattice / coroot lattice,
// and the faithfulness test for a sum of irreducibles.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "liejordan/rootdata.hpp"

namespace liejordan {

/// A nonidentity center element: sum coords[i] * alpha_{i+1}^vee reduced into [0,1)^l.
struct CenterClass {
    std::vector<mpq_class> coords;

    std::string to_string() const;  // "(0, 0, 1/2)"
    bool operator==(const CenterClass& o) const;
    bool operator<(const CenterClass& o) const;  // lexicographic
};

/// Reduce each coordinate into [0,1).
CenterClass reduce_mod_one(std::vector<mpq_class> coords);

/// The set D of a sum of irreducibles: nonempty, nonzero, no repeats.
class WeightSet {
public:
    explicit WeightSet(std::vector<DominantWeight> weights);

    const std::vector<DominantWeight>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

private:
    std::vector<DominantWeight> weights_;
};

/// |Z| = det(cartan).
mpz_class center_order(const RootDatum& datum);

/// Nonidentity classes, lexicographically ordered; size is center_order - 1.
std::vector<CenterClass> center_classes(const RootDatum& datum);

/// lambda(x) mod 1 = sum lambda_i * mu_i mod 1.
mpq_class pair(const DominantWeight& weight, const CenterClass& x);

/// True iff every nonidentity center class pairs nontrivially with some weight.
bool is_faithful(const RootDatum& datum, const WeightSet& weights);

}  // namespace liejordan
