#include "liejordan/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "liejordan/error.hpp"

namespace liejordan {

char family_letter(Family f) {
    return "ABCDEFG"[static_cast<int>(f)];
}

Family parse_family(std::string_view text) {
    if (text.size() == 1) {
        char c = text[0];
        if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
        if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
    }
    throw InputError("unknown family '" + std::string(text) + "' (expected one of A..G)");
}

std::string SimpleType::name() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

SimpleType make_type(Family family, int rank) {
    auto reject = [&](const char* constraint) {
        throw InputError("invalid type " + std::string(1, family_letter(family)) +
                         std::to_string(rank) + ": requires " + constraint);
    };
    switch (family) {
        case Family::A: if (rank < 1) reject("rank >= 1"); break;
        case Family::B: if (rank < 2) reject("rank >= 2"); break;
        case Family::C: if (rank < 2) reject("rank >= 2"); break;
        case Family::D: if (rank < 3) reject("rank >= 3"); break;
        case Family::E: if (rank < 6 || rank > 8) reject("rank in {6, 7, 8}"); break;
        case Family::F: if (rank != 4) reject("rank = 4"); break;
        case Family::G: if (rank != 2) reject("rank = 2"); break;
    }
    return SimpleType{family, rank};
}

std::vector<SimpleType> all_types(int max_rank) {
    std::vector<SimpleType> out;
    for (int l = 1; l <= max_rank; ++l) out.push_back({Family::A, l});
    for (int l = 2; l <= max_rank; ++l) out.push_back({Family::B, l});
    for (int l = 2; l <= max_rank; ++l) out.push_back({Family::C, l});
    for (int l = 3; l <= max_rank; ++l) out.push_back({Family::D, l});
    for (int l = 6; l <= std::min(max_rank, 8); ++l) out.push_back({Family::E, l});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    if (max_rank >= 2) out.push_back({Family::G, 2});
    return out;
}

std::uint64_t Budget::default_cap() const {
    return (std::uint64_t{1} << max_rank) + 10;
}

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("LIEJORDAN_MAX_RANK"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 40)
            throw InputError("LIEJORDAN_MAX_RANK must be an integer in [1, 40], got '" +
                             std::string(env) + "'");
        b.max_rank = static_cast<int>(v);
    }
    return b;
}

bool DominantWeight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

std::string DominantWeight::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        if (!first) os << '+';
        if (coords[i] != 1) os << coords[i];
        os << 'w' << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

DominantWeight DominantWeight::zero(int rank) {
    return DominantWeight{std::vector<std::uint32_t>(static_cast<std::size_t>(rank), 0)};
}

DominantWeight DominantWeight::fundamental(int rank, int index) {
    if (index < 1 || index > rank)
        throw InputError("fundamental weight index " + std::to_string(index) + " out of range");
    auto w = zero(rank);
    w.coords[static_cast<std::size_t>(index - 1)] = 1;
    return w;
}

namespace {

struct Dynkin {
    std::vector<std::pair<int, int>> edges;  // 0-based
    std::vector<int> length;                 // relative squared root lengths
};

Dynkin dynkin_diagram(SimpleType t) {
    const int l = t.rank;
    Dynkin d;
    d.length.assign(static_cast<std::size_t>(l), 1);
    auto chain = [&](int n) {
        for (int i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
    };
    switch (t.family) {
        case Family::A:
            chain(l);
            break;
        case Family::B:
            chain(l);
            std::fill(d.length.begin(), d.length.end() - 1, 2);
            break;
        case Family::C:
            chain(l);
            d.length.back() = 2;
            break;
        case Family::D:
            chain(l - 1);
            d.edges.emplace_back(l - 3, l - 1);
            break;
        case Family::E:
            chain(l - 1);
            d.edges.emplace_back(l - 4, l - 1);
            break;
        case Family::F:
            chain(4);
            d.length = {1, 1, 2, 2};
            break;
        case Family::G:
            chain(2);
            d.length = {1, 3};
            break;
    }
    return d;
}

IntMatrix cartan_from(const Dynkin& d) {
    const auto n = d.length.size();
    IntMatrix c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
    // (alpha_i, alpha_j) = -max(L_i, L_j)/2 for joined nodes, so
    // <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / L_i = -max / L_i.
    for (auto [i, j] : d.edges) {
        const auto li = d.length[static_cast<std::size_t>(i)];
        const auto lj = d.length[static_cast<std::size_t>(j)];
        const auto m = std::max(li, lj);
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -(m / li);
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -(m / lj);
    }
    return c;
}

// Positive roots of the dual system: close the simple coroots under simple
// reflections s_i(b) = b - <alpha_i, b> alpha_i^vee, keeping positive images.
std::vector<CorootVec> positive_coroots_by_closure(const IntMatrix& cartan) {
    const auto n = cartan.size();
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& b : frontier) {
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t p = 0;
                for (std::size_t k = 0; k < n; ++k) p += b[k] * cartan[k][i];
                if (p == 0) continue;
                auto r = b;
                r[i] -= p;
                if (std::any_of(r.begin(), r.end(), [](auto v) { return v < 0; })) continue;
                if (seen.insert(r).second) next.push_back(std::move(r));
            }
        }
        frontier = std::move(next);
    }
    std::vector<CorootVec> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.emplace_back(v.begin(), v.end());
    auto height = [](const CorootVec& v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); };
    std::sort(out.begin(), out.end(), [&](const CorootVec& a, const CorootVec& b) {
        auto ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    return out;
}

}  // namespace

RootDatum::RootDatum(SimpleType type) : type_(make_type(type.family, type.rank)) {
    cartan_ = cartan_from(dynkin_diagram(type_));
    coroots_ = positive_coroots_by_closure(cartan_);
    rho_product_ = 1;
    for (const auto& c : coroots_)
        rho_product_ *= static_cast<unsigned long>(std::accumulate(c.begin(), c.end(), std::uint64_t{0}));
}

RootDatum build_root_datum(SimpleType type) {
    return RootDatum(type);
}

std::size_t expected_positive_root_count(SimpleType t) {
    const auto l = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case Family::A: return l * (l + 1) / 2;
        case Family::B:
        case Family::C: return l * l;
        case Family::D: return l * (l - 1);
        case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

mpz_class determinant(const IntMatrix& m) {
    // Bareiss elimination; every intermediate division is exact.
    const auto n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

void check_rank(const RootDatum& datum, const DominantWeight& weight) {
    if (weight.rank() != static_cast<std::size_t>(datum.rank()))
        throw InputError("weight has " + std::to_string(weight.rank()) + " coordinates but " +
                         datum.type().name() + " has rank " + std::to_string(datum.rank()));
}

mpz_class weyl_numerator(const RootDatum& datum, const DominantWeight& weight) {
    mpz_class num = 1;
    for (const auto& c : datum.positive_coroots()) {
        // <lambda + rho, beta^vee> = sum (lambda_i + 1) c_i
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (std::uint64_t{weight.coords[i]} + 1) * c[i];
        num *= static_cast<unsigned long>(s);
    }
    return num;
}

}  // namespace

mpq_class weyl_dim_quotient(const RootDatum& datum, const DominantWeight& weight) {
    check_rank(datum, weight);
    mpq_class q;
    q.get_num() = weyl_numerator(datum, weight);
    q.get_den() = datum.rho_product();
    return q;
}

mpz_class weyl_dim(const RootDatum& datum, const DominantWeight& weight) {
    check_rank(datum, weight);
    mpz_class num = weyl_numerator(datum, weight);
    if (!mpz_divisible_p(num.get_mpz_t(), datum.rho_product().get_mpz_t()))
        throw std::logic_error("Weyl product is not integral for " + datum.type().name() + " " +
                               weight.to_string());
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), datum.rho_product().get_mpz_t());
    return num;
}

std::vector<WeightDim> enumerate_dominant_weights(const RootDatum& datum, std::uint64_t cap,
                                                  const Budget& budget) {
    if (cap < 1) throw InputError("enumeration cap must be >= 1");
    if (cap > budget.default_cap() && !budget.allow_large_cap)
        throw InputError("enumeration cap " + std::to_string(cap) + " exceeds 2^" +
                         std::to_string(budget.max_rank) + "+10 = " +
                         std::to_string(budget.default_cap()) + "; pass the large-cap override");

    const auto n = static_cast<std::size_t>(datum.rank());
    const mpz_class limit = static_cast<unsigned long>(cap);
    std::vector<WeightDim> out;
    DominantWeight w = DominantWeight::zero(datum.rank());

    // Coordinates are fixed left to right with the rest held at zero; dim is
    // strictly increasing in each coordinate, so the first overshoot ends
    // that coordinate's range for every completion.
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (!w.is_zero()) {
                auto d = weyl_dim(datum, w);
                if (d <= limit) out.push_back({w, std::move(d)});
            }
            return;
        }
        for (std::uint32_t v = 0;; ++v) {
            w.coords[i] = v;
            if (v > 0 && weyl_dim(datum, w) > limit) break;
            self(self, i + 1);
        }
        w.coords[i] = 0;
    };
    extend(extend, 0);

    std::sort(out.begin(), out.end(), [](const WeightDim& a, const WeightDim& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.weight < b.weight;
    });
    return out;
}

}  // namespace liejordan
