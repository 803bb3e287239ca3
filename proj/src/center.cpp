#include "liejordan/center.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "liejordan/error.hpp"

namespace liejordan {

namespace {

mpq_class frac(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    mpq_class r = q - fl;
    r.canonicalize();
    return r;
}

// Rational Gauss-Jordan inverse of a nonsingular integer matrix.
std::vector<std::vector<mpq_class>> inverse(const IntMatrix& m) {
    const auto n = m.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw std::logic_error("singular Cartan matrix");
        std::swap(a[k], a[p]);
        const mpq_class piv = a[k][k];
        for (auto& v : a[k]) v /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const mpq_class f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

bool lex_less(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string CenterClass::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ", " : "") << coords[i].get_str();
    os << ')';
    return os.str();
}

bool CenterClass::operator==(const CenterClass& o) const { return coords == o.coords; }
bool CenterClass::operator<(const CenterClass& o) const { return lex_less(coords, o.coords); }

CenterClass reduce_mod_one(std::vector<mpq_class> coords) {
    for (auto& c : coords) c = frac(c);
    return CenterClass{std::move(coords)};
}

WeightSet::WeightSet(std::vector<DominantWeight> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InputError("weight set must be nonempty");
    const auto rank = weights_.front().rank();
    for (const auto& w : weights_) {
        if (w.rank() != rank) throw InputError("weights in a set must share one rank");
        if (w.is_zero()) throw InputError("weight set may not contain the zero weight");
    }
    auto sorted = weights_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("weight set contains a repeated weight");
}

mpz_class center_order(const RootDatum& datum) {
    return determinant(datum.cartan());
}

std::vector<CenterClass> center_classes(const RootDatum& datum) {
    const auto n = static_cast<std::size_t>(datum.rank());
    // Row j of the inverse Cartan matrix is the fundamental coweight w_j^vee in
    // simple-coroot coordinates; their residues generate P^vee / Q^vee.
    const auto inv = inverse(datum.cartan());
    std::vector<std::vector<mpq_class>> gens;
    for (const auto& row : inv) {
        auto g = reduce_mod_one(row).coords;
        if (std::any_of(g.begin(), g.end(), [](const mpq_class& q) { return q != 0; }))
            gens.push_back(std::move(g));
    }

    std::set<std::vector<mpq_class>, decltype(&lex_less)> group(&lex_less);
    std::deque<std::vector<mpq_class>> queue;
    std::vector<mpq_class> zero(n, mpq_class(0));
    group.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<mpq_class> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = frac(x[i] + g[i]);
            if (group.insert(y).second) queue.push_back(std::move(y));
        }
    }

    std::vector<CenterClass> out;
    for (const auto& v : group)
        if (v != zero) out.push_back(CenterClass{v});
    return out;
}

mpq_class pair(const DominantWeight& weight, const CenterClass& x) {
    if (weight.rank() != x.coords.size())
        throw InputError("rank mismatch between weight and center class");
    mpq_class s = 0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) s += x.coords[i] * weight.coords[i];
    return frac(s);
}

bool is_faithful(const RootDatum& datum, const WeightSet& weights) {
    if (weights.weights().front().rank() != static_cast<std::size_t>(datum.rank()))
        throw InputError("weight rank does not match " + datum.type().name());
    for (const auto& x : center_classes(datum)) {
        const bool detected = std::any_of(weights.weights().begin(), weights.weights().end(),
                                          [&](const DominantWeight& w) { return pair(w, x) != 0; });
        if (!detected) return false;
    }
    return true;
}

}  // namespace liejordan
