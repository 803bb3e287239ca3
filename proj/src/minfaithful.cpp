#include "liejordan/minfaithful.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "liejordan/error.hpp"

namespace liejordan {

namespace {

constexpr std::size_t kMaxCoverUniverse = 20;

std::vector<std::uint32_t> preference_key(const RootDatum& datum, const DominantWeight& w) {
    auto key = w.coords;
    if (datum.type().family == Family::D) std::swap(key[key.size() - 1], key[key.size() - 2]);
    return key;
}

using Cost = std::pair<std::uint64_t, std::uint64_t>;  // (total dim, weight count)
constexpr Cost kInfinite{std::numeric_limits<std::uint64_t>::max(), 0};

Cost add(Cost a, Cost b) {
    if (a == kInfinite || b == kInfinite) return kInfinite;
    return {a.first + b.first, a.second + b.second};
}

}  // namespace

bool weight_preferred(const RootDatum& datum, const DominantWeight& a, const DominantWeight& b) {
    return preference_key(datum, a) > preference_key(datum, b);
}

std::vector<CoverItem> cover_items(const RootDatum& datum, std::uint64_t cap, const Budget& budget) {
    const auto classes = center_classes(datum);
    if (classes.size() > kMaxCoverUniverse)
        throw ResourceLimit("center of " + datum.type().name() + " has " +
                            std::to_string(classes.size() + 1) + " elements; cover DP supports at most " +
                            std::to_string(kMaxCoverUniverse + 1));

    std::map<std::uint32_t, CoverItem> best;
    for (auto& [weight, dim] : enumerate_dominant_weights(datum, cap, budget)) {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < classes.size(); ++k)
            if (pair(weight, classes[k]) != 0) mask |= std::uint32_t{1} << k;
        if (mask == 0 && !classes.empty()) continue;
        CoverItem item{weight, dim.get_ui(), mask};
        auto it = best.find(mask);
        if (it == best.end()) {
            best.emplace(mask, std::move(item));
        } else if (item.dim < it->second.dim ||
                   (item.dim == it->second.dim && weight_preferred(datum, item.weight, it->second.weight))) {
            it->second = std::move(item);
        }
    }

    std::vector<CoverItem> out;
    for (auto& [mask, item] : best) out.push_back(std::move(item));
    std::sort(out.begin(), out.end(), [&](const CoverItem& a, const CoverItem& b) {
        return weight_preferred(datum, a.weight, b.weight);
    });
    return out;
}

std::vector<std::size_t> solve_cover(const std::vector<CoverItem>& items, std::size_t universe) {
    if (universe > kMaxCoverUniverse) throw ResourceLimit("cover universe too large");
    const std::uint32_t full = (std::uint32_t{1} << universe) - 1;

    // remaining[c]: cheapest (dim, count) completing a cover from covered set c.
    std::vector<Cost> remaining(std::size_t{full} + 1, kInfinite);
    remaining[full] = {0, 0};
    for (std::uint32_t c = full; c-- > 0;) {
        for (const auto& it : items) {
            if ((it.mask & ~c & full) == 0) continue;
            const auto cand = add({it.dim, 1}, remaining[c | (it.mask & full)]);
            if (cand < remaining[c]) remaining[c] = cand;
        }
    }
    if (remaining[0] == kInfinite) throw std::logic_error("no faithful cover among candidates");

    // Take the earliest item that stays on an optimal path. An optimal set
    // containing an earlier item would have been found first, so the result
    // is the earliest optimal set in item order.
    std::vector<std::size_t> picked;
    std::uint32_t covered = 0;
    while (covered != full) {
        bool advanced = false;
        for (std::size_t i = 0; i < items.size(); ++i) {
            const auto& it = items[i];
            if ((it.mask & ~covered & full) == 0) continue;
            const auto next = covered | (it.mask & full);
            if (add({it.dim, 1}, remaining[next]) == remaining[covered]) {
                picked.push_back(i);
                covered = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("cover reconstruction failed");
    }
    return picked;
}

RdimResult rdim(const RootDatum& datum, const Budget& budget) {
    const int l = datum.rank();
    if (l > budget.max_rank)
        throw ResourceLimit("rank " + std::to_string(l) + " exceeds the rank budget " +
                            std::to_string(budget.max_rank) + " (set LIEJORDAN_MAX_RANK to raise it)");

    // Any summand of an optimal faithful module has dim <= rdim <= 2^l + 10,
    // so capping the search there loses nothing.
    const std::uint64_t cap = (std::uint64_t{1} << l) + 10;
    const auto universe = center_classes(datum).size();
    auto items = cover_items(datum, cap, budget);

    std::vector<std::size_t> chosen;
    if (universe == 0) {
        // Trivial center: the smallest nonzero module is already faithful.
        auto best = std::min_element(items.begin(), items.end(), [&](const CoverItem& a, const CoverItem& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return weight_preferred(datum, a.weight, b.weight);
        });
        if (best == items.end()) throw std::logic_error("no nonzero weight below the cap");
        chosen.push_back(static_cast<std::size_t>(best - items.begin()));
    } else {
        chosen = solve_cover(items, universe);
    }

    std::vector<DominantWeight> weights;
    std::vector<mpz_class> dims;
    mpz_class total = 0;
    for (auto i : chosen) {
        weights.push_back(items[i].weight);
        dims.emplace_back(static_cast<unsigned long>(items[i].dim));
        total += dims.back();
    }
    return RdimResult{total, WeightSet(std::move(weights)), std::move(dims)};
}

std::vector<LemmaRow> lemma_table(int max_rank, const Budget& budget) {
    if (max_rank < 1) throw InputError("max rank must be >= 1");
    if (max_rank > budget.max_rank)
        throw ResourceLimit("max rank " + std::to_string(max_rank) + " exceeds the rank budget " +
                            std::to_string(budget.max_rank));
    std::vector<std::future<LemmaRow>> jobs;
    for (const auto& t : all_types(max_rank)) {
        jobs.push_back(std::async(std::launch::async, [t, budget] {
            return LemmaRow{t, rdim(build_root_datum(t), budget)};
        }));
    }
    std::vector<LemmaRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

bool verify_upb(const RootDatum& datum, const Budget& budget) {
    const mpz_class bound = (mpz_class(1) << datum.rank()) + 10;
    return rdim(datum, budget).total_dim <= bound;
}

}  // namespace liejordan
