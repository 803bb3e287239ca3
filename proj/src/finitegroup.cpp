#include "liejordan/finitegroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "liejordan/error.hpp"

namespace liejordan {

namespace {

std::vector<std::uint64_t> empty_bits(std::size_t n) {
    return std::vector<std::uint64_t>((n + 63) / 64, 0);
}

void set_bit(std::vector<std::uint64_t>& bits, Element e) {
    bits[e / 64] |= std::uint64_t{1} << (e % 64);
}

bool test_bit(const std::vector<std::uint64_t>& bits, Element e) {
    return (bits[e / 64] >> (e % 64)) & 1U;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table, const GroupLimits& limits) {
    const auto n = table.size();
    if (n == 0) throw InputError("group table is empty");
    if (n > limits.max_closure_order)
        throw ResourceLimit("table order " + std::to_string(n) + " exceeds the order limit " +
                            std::to_string(limits.max_closure_order));
    FiniteGroup g;
    g.order_ = n;
    g.table_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n)
            throw InputError("table row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                             " entries, expected " + std::to_string(n));
        for (auto v : table[i]) {
            if (v >= n) throw InputError("table entry " + std::to_string(v) + " out of range");
            g.table_.push_back(v);
        }
    }
    for (Element i = 0; i < n; ++i) {
        if (g.mul(0, i) != i || g.mul(i, 0) != i)
            throw InputError("table is not a group: index 0 is not a two-sided identity");
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            row[g.table_[i * n + j]] = 1;
            col[g.table_[j * n + i]] = 1;
        }
        if (std::count(row.begin(), row.end(), 1) != static_cast<long>(n) ||
            std::count(col.begin(), col.end(), 1) != static_cast<long>(n))
            throw InputError("table is not a group: not a Latin square at index " + std::to_string(i));
    }

    // Associativity. The left nucleus {a : a(bx) = (ab)x for all b, x} is closed
    // under products, so checking it on a generating set covers everything.
    auto gens_bits = empty_bits(n);
    std::vector<Element> reached{0};
    set_bit(gens_bits, 0);
    std::vector<Element> gens;
    while (reached.size() < n) {
        Element next = 0;
        while (test_bit(gens_bits, next)) ++next;
        gens.push_back(next);
        set_bit(gens_bits, next);
        reached.push_back(next);
        for (std::size_t k = 0; k < reached.size(); ++k) {
            for (auto s : gens) {
                const auto p = g.mul(reached[k], s);
                if (!test_bit(gens_bits, p)) {
                    set_bit(gens_bits, p);
                    reached.push_back(p);
                }
            }
        }
    }
    for (auto a : gens)
        for (Element b = 0; b < n; ++b)
            for (Element x = 0; x < n; ++x)
                if (g.mul(a, g.mul(b, x)) != g.mul(g.mul(a, b), x))
                    throw InputError("table is not associative: (" + std::to_string(a) + "*" + std::to_string(b) +
                                     ")*" + std::to_string(x) + " differs from " + std::to_string(a) + "*(" +
                                     std::to_string(b) + "*" + std::to_string(x) + ")");
    g.fill_inverses();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           const std::vector<std::vector<std::uint32_t>>& generators,
                                           const GroupLimits& limits) {
    if (degree == 0) throw InputError("permutation degree must be >= 1");
    using Perm = std::vector<std::uint32_t>;
    std::vector<Perm> gens;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& line = generators[k];
        if (line.size() != degree)
            throw InputError("generator " + std::to_string(k + 1) + " has " + std::to_string(line.size()) +
                             " images, expected " + std::to_string(degree));
        Perm p(degree);
        std::vector<char> hit(degree, 0);
        for (std::size_t x = 0; x < degree; ++x) {
            if (line[x] < 1 || line[x] > degree || hit[line[x] - 1])
                throw InputError("generator " + std::to_string(k + 1) + " is not a permutation of 1.." +
                                 std::to_string(degree));
            hit[line[x] - 1] = 1;
            p[x] = line[x] - 1;
        }
        gens.push_back(std::move(p));
    }

    Perm id(degree);
    for (std::size_t x = 0; x < degree; ++x) id[x] = static_cast<std::uint32_t>(x);
    std::map<Perm, Element> index{{id, 0}};
    std::vector<Perm> elems{id};
    std::vector<std::pair<Element, std::size_t>> parent{{0, 0}};  // (element, generator)
    std::vector<std::vector<Element>> right(gens.size());            // right[k][e] = e * gen_k
    for (std::size_t e = 0; e < elems.size(); ++e) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Perm q(degree);
            for (std::size_t x = 0; x < degree; ++x) q[x] = gens[k][elems[e][x]];
            auto [it, fresh] = index.emplace(q, static_cast<Element>(elems.size()));
            if (fresh) {
                if (elems.size() >= limits.max_closure_order)
                    throw ResourceLimit("permutation closure exceeds the order limit " +
                                        std::to_string(limits.max_closure_order));
                elems.push_back(std::move(q));
                parent.emplace_back(static_cast<Element>(e), k);
            }
            right[k].push_back(it->second);
        }
    }

    // Row i: i * j = (i * parent(j)) * gen, filled in discovery order of j.
    FiniteGroup g;
    g.order_ = elems.size();
    const auto n = g.order_;
    g.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        g.table_[i * n] = static_cast<Element>(i);
        for (std::size_t j = 1; j < n; ++j) {
            const auto [p, k] = parent[j];
            g.table_[i * n + j] = right[k][g.table_[i * n + p]];
        }
    }
    g.fill_inverses();
    return g;
}

void FiniteGroup::fill_inverses() {
    inverse_.assign(order_, 0);
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b)
            if (mul(a, b) == 0) {
                inverse_[a] = b;
                break;
            }
}

bool FiniteGroup::is_abelian() const {
    for (Element a = 0; a < order_; ++a)
        for (Element b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    auto flush = [&] {
        auto b = cur.find_first_not_of(" \t\r");
        if (b != std::string::npos && cur[b] != '#') lines.push_back(cur.substr(b));
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n' || c == '/') flush();
        else cur.push_back(c);
    }
    flush();
    return lines;
}

std::vector<std::uint32_t> parse_numbers(const std::string& line, std::size_t line_no) {
    std::istringstream is(line);
    std::vector<std::uint32_t> out;
    std::string tok;
    while (is >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
            throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                             tok + "'");
        out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return out;
}

}  // namespace

FiniteGroup parse_group(std::string_view text, const GroupLimits& limits) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw InputError("group input is empty");
    std::istringstream head(lines[0]);
    std::string kind, extra;
    std::size_t size = 0;
    if (!(head >> kind >> size) || (head >> extra))
        throw InputError("first line must be 'perm <degree>' or 'table <n>'");
    if (kind == "perm") {
        std::vector<std::vector<std::uint32_t>> gens;
        for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_numbers(lines[i], i + 1));
        return FiniteGroup::from_permutations(size, gens, limits);
    }
    if (kind == "table") {
        if (size > limits.max_closure_order)
            throw ResourceLimit("table order " + std::to_string(size) + " exceeds the order limit " +
                                std::to_string(limits.max_closure_order));
        if (lines.size() - 1 != size)
            throw InputError("table " + std::to_string(size) + " needs " + std::to_string(size) + " rows, found " +
                             std::to_string(lines.size() - 1));
        std::vector<std::vector<Element>> table;
        for (std::size_t i = 1; i < lines.size(); ++i) table.push_back(parse_numbers(lines[i], i + 1));
        return FiniteGroup::from_table(std::move(table), limits);
    }
    throw InputError("unknown group format '" + kind + "' (expected 'perm' or 'table')");
}

Subgroup Subgroup::generated(const FiniteGroup& g, std::vector<Element> generators) {
    Subgroup h;
    h.bits_ = empty_bits(g.order());
    for (auto s : generators)
        if (s >= g.order()) throw InputError("generator index out of range");
    std::erase(generators, Element{0});
    h.generators_ = std::move(generators);
    h.elements_.push_back(0);
    set_bit(h.bits_, 0);
    for (std::size_t k = 0; k < h.elements_.size(); ++k) {
        for (auto s : h.generators_) {
            const auto p = g.mul(h.elements_[k], s);
            if (!test_bit(h.bits_, p)) {
                set_bit(h.bits_, p);
                h.elements_.push_back(p);
            }
        }
    }
    std::sort(h.elements_.begin(), h.elements_.end());
    return h;
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
    std::vector<Element> all(g.order());
    for (Element e = 0; e < g.order(); ++e) all[e] = e;
    return generated(g, std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w]) return false;
    return true;
}

bool Subgroup::is_abelian(const FiniteGroup& g) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (g.mul(generators_[i], generators_[j]) != g.mul(generators_[j], generators_[i])) return false;
    return true;
}

bool Subgroup::is_normal_in(const Subgroup& f, const FiniteGroup& g) const {
    for (auto x : f.generators())
        for (auto a : generators_)
            if (!contains(g.mul(g.mul(g.inv(x), a), x))) return false;
    return true;
}

std::vector<Subgroup> subgroups_within(const FiniteGroup& g, const Subgroup& f, const GroupLimits& limits) {
    // ⟨H, c⟩ depends only on the cyclic group ⟨c⟩, so one generator per cyclic
    // subgroup of f is enough for the single-element extensions.
    std::vector<Element> cyclic_reps;
    {
        std::set<std::vector<std::uint64_t>> seen;
        for (auto e : f.elements()) {
            if (e == 0) continue;
            if (seen.insert(Subgroup::generated(g, {e}).bits()).second) cyclic_reps.push_back(e);
        }
    }

    std::vector<Subgroup> found{Subgroup::generated(g, {})};
    std::set<std::vector<std::uint64_t>> seen{found.front().bits()};
    for (std::size_t k = 0; k < found.size(); ++k) {
        for (auto c : cyclic_reps) {
            if (found[k].contains(c)) continue;
            auto gens = found[k].generators();
            gens.push_back(c);
            auto h = Subgroup::generated(g, std::move(gens));
            if (seen.insert(h.bits()).second) {
                if (found.size() >= limits.max_subgroups)
                    throw ResourceLimit("subgroup lattice exceeds " + std::to_string(limits.max_subgroups) +
                                        " subgroups");
                found.push_back(std::move(h));
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return found;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const GroupLimits& limits) {
    if (g.order() > limits.max_jordan_order)
        throw ResourceLimit("order " + std::to_string(g.order()) + " exceeds the subgroup-lattice limit " +
                            std::to_string(limits.max_jordan_order));
    return subgroups_within(g, Subgroup::whole(g), limits);
}

namespace {

// Largest abelian A normal in F among candidates (ascending size), as an index.
std::size_t min_index_among(const Subgroup& f, const FiniteGroup& g, const std::vector<Subgroup>& candidates,
                            const std::vector<char>& abelian) {
    for (std::size_t k = candidates.size(); k-- > 0;) {
        const auto& a = candidates[k];
        if (a.size() > f.size() || f.size() % a.size() != 0) continue;
        if (abelian[k] && a.is_subset_of(f) && a.is_normal_in(f, g)) return f.size() / a.size();
    }
    return f.size();
}

}  // namespace

std::size_t min_normal_abelian_index(const Subgroup& f, const FiniteGroup& g, const GroupLimits& limits) {
    if (f.size() > limits.max_jordan_order)
        throw ResourceLimit("order " + std::to_string(f.size()) + " exceeds the subgroup-lattice limit " +
                            std::to_string(limits.max_jordan_order));
    const auto subs = subgroups_within(g, f, limits);
    std::vector<char> abelian;
    for (const auto& s : subs) abelian.push_back(s.is_abelian(g));
    return min_index_among(f, g, subs, abelian);
}

JordanResult jordan_constant(const FiniteGroup& g, const GroupLimits& limits) {
    const auto subs = all_subgroups(g, limits);
    std::vector<char> abelian;
    for (const auto& s : subs) abelian.push_back(s.is_abelian(g));
    std::size_t best = 0, witness = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].size() <= best) continue;  // index is at most |F|
        const auto idx = min_index_among(subs[i], g, subs, abelian);
        if (idx > best) {
            best = idx;
            witness = i;
        }
    }
    return JordanResult{best, subs[witness]};
}

std::size_t boundedness_constant(const FiniteGroup& g) {
    return g.order();
}

FiniteGroup as_group(const FiniteGroup& g, const Subgroup& h) {
    const auto& el = h.elements();
    std::vector<Element> pos(g.order(), 0);
    for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = static_cast<Element>(i);
    std::vector<std::vector<Element>> table(el.size(), std::vector<Element>(el.size()));
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) table[i][j] = pos[g.mul(el[i], el[j])];
    return FiniteGroup::from_table(std::move(table));
}

}  // namespace liejordan
