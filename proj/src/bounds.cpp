#include "liejordan/bounds.hpp"

#include <algorithm>

#include "liejordan/error.hpp"

namespace liejordan {

namespace {

constexpr std::uint64_t kMaxShift = std::uint64_t{1} << 22;

mpz_class pow2(const mpz_class& e) {
    if (e < 0) throw std::logic_error("negative power of two");
    if (e > static_cast<unsigned long>(kMaxShift))
        throw ResourceLimit("bound argument needs 2^" + e.get_str() + ", above the 2^" +
                            std::to_string(kMaxShift) + " guard");
    return mpz_class(1) << static_cast<mp_bitcnt_t>(e.get_ui());
}

mpz_class u(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

bool is_odd_exception(std::uint64_t m) {
    return m == 63 || m == 65 || m == 67 || m == 69;
}

}  // namespace

BoundExpr BoundExpr::exact(mpz_class value) {
    if (value < 1) throw std::logic_error("exact bound values are >= 1");
    BoundExpr e;
    e.kind_ = Kind::Exact;
    e.value_ = std::move(value);
    return e;
}

BoundExpr BoundExpr::symbolic_j(std::uint64_t m) {
    if (m == 0 || m >= 71 || is_odd_exception(m))
        throw std::logic_error("J(" + std::to_string(m) + ") is known and must not be symbolic");
    BoundExpr e;
    e.kind_ = Kind::SymbolicJ;
    e.value_ = 0;
    e.arg_ = m;
    return e;
}

BoundExpr BoundExpr::product(std::vector<BoundExpr> operands) {
    mpz_class coeff = 1;
    std::vector<BoundExpr> rest;
    for (auto& op : operands) {
        if (op.is_exact()) {
            coeff *= op.value_;
        } else if (op.kind_ == Kind::Product) {
            for (auto& inner : op.operands_) {
                if (inner.is_exact()) coeff *= inner.value_;
                else rest.push_back(std::move(inner));
            }
        } else {
            rest.push_back(std::move(op));
        }
    }
    if (rest.empty()) return exact(coeff);
    if (coeff == 1 && rest.size() == 1) return std::move(rest.front());
    BoundExpr e;
    e.kind_ = Kind::Product;
    e.value_ = 0;
    if (coeff != 1) e.operands_.push_back(exact(coeff));
    for (auto& r : rest) e.operands_.push_back(std::move(r));
    return e;
}

BoundExpr BoundExpr::power(BoundExpr base, std::uint64_t exponent) {
    if (exponent == 0) return exact(1);
    if (exponent == 1) return base;
    if (base.is_exact()) {
        const auto bits = mpz_sizeinbase(base.value_.get_mpz_t(), 2);
        if (base.value_ != 1 && bits > BoundLimits{}.max_result_bits / exponent)
            throw ResourceLimit("exact power would exceed " +
                                std::to_string(BoundLimits{}.max_result_bits) + " bits");
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
        return exact(std::move(r));
    }
    BoundExpr e;
    e.kind_ = Kind::Power;
    e.value_ = 0;
    e.exponent_ = exponent;
    e.operands_.push_back(std::move(base));
    return e;
}

std::string BoundExpr::to_string() const {
    switch (kind_) {
        case Kind::Exact:
            return value_.get_str();
        case Kind::SymbolicJ:
            return "J(" + std::to_string(arg_) + ")";
        case Kind::Power: {
            const auto& b = operands_.front();
            auto s = b.to_string();
            if (b.kind_ == Kind::Product || b.kind_ == Kind::Power) s = "(" + s + ")";
            return s + "^" + std::to_string(exponent_);
        }
        case Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < operands_.size(); ++i) {
                if (i) s += " * ";
                s += operands_[i].to_string();
            }
            return s;
        }
    }
    return {};
}

nlohmann::json BoundExpr::to_json() const {
    nlohmann::json j;
    switch (kind_) {
        case Kind::Exact:
            j["kind"] = "exact";
            j["value"] = value_.get_str();
            break;
        case Kind::SymbolicJ:
            j["kind"] = "symbolic_j";
            j["arg"] = arg_;
            break;
        case Kind::Product:
            j["kind"] = "product";
            j["operands"] = nlohmann::json::array();
            for (const auto& op : operands_) j["operands"].push_back(op.to_json());
            break;
        case Kind::Power:
            j["kind"] = "power";
            j["operands"] = nlohmann::json::array({operands_.front().to_json()});
            j["exponent"] = exponent_;
            break;
    }
    return j;
}

BoundExpr BoundExpr::from_json(const nlohmann::json& j) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        BoundExpr e;
        e.value_ = 0;
        if (kind == "exact") {
            mpz_class v;
            const auto text = j.at("value").get<std::string>();
            if (text.empty() || v.set_str(text, 10) != 0) throw InputError("bad exact value '" + text + "'");
            return exact(std::move(v));
        } else if (kind == "symbolic_j") {
            return symbolic_j(j.at("arg").get<std::uint64_t>());
        } else if (kind == "product") {
            e.kind_ = Kind::Product;
            for (const auto& op : j.at("operands")) e.operands_.push_back(from_json(op));
            if (e.operands_.size() < 2) throw InputError("product needs at least two operands");
        } else if (kind == "power") {
            e.kind_ = Kind::Power;
            const auto& ops = j.at("operands");
            if (ops.size() != 1) throw InputError("power needs exactly one operand");
            e.operands_.push_back(from_json(ops.front()));
            e.exponent_ = j.at("exponent").get<std::uint64_t>();
            if (e.exponent_ < 2) throw InputError("power exponent must be >= 2");
        } else {
            throw InputError("unknown bound kind '" + kind + "'");
        }
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed bound JSON: ") + ex.what());
    } catch (const std::logic_error& ex) {
        if (dynamic_cast<const InputError*>(&ex)) throw;
        throw InputError(std::string("invalid bound JSON: ") + ex.what());
    }
}

bool BoundExpr::operator==(const BoundExpr& o) const {
    return kind_ == o.kind_ && value_ == o.value_ && arg_ == o.arg_ && exponent_ == o.exponent_ &&
           operands_ == o.operands_;
}

bool jordan_gl_is_known(const mpz_class& m) {
    return m >= 71 || (m.fits_ulong_p() && is_odd_exception(m.get_ui()));
}

BoundExpr jordan_gl(const mpz_class& m, const BoundLimits& limits) {
    if (m < 0) throw InputError("J(m) needs m >= 0");
    if (m == 0) return BoundExpr::exact(1);
    if (!jordan_gl_is_known(m)) return BoundExpr::symbolic_j(m.get_ui());
    if (!m.fits_ulong_p() || m.get_ui() + 1 > limits.max_factorial_arg)
        throw ResourceLimit("J(" + m.get_str() + ") = (" + m.get_str() +
                            "+1)! is above the factorial guard " +
                            std::to_string(limits.max_factorial_arg) + "!");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m.get_ui() + 1);
    return BoundExpr::exact(std::move(f));
}

mpz_class lie_argument(std::uint64_t n) {
    return u(n) * (pow2(u(n)) + 10);
}

mpz_class algebraic_argument(std::uint64_t n) {
    return u(n) * (pow2(2 * u(n) + 1) + 20);
}

mpz_class compact_complex_argument(std::uint64_t n) {
    const mpz_class d = 2 * u(n) * u(n) + u(n);
    return d * (pow2(d) + 10);
}

mpz_class hyperbolic_argument(std::uint64_t n) {
    const mpz_class d = 2 * u(n) + u(n) * u(n);
    return d * (pow2(d) + 10);
}

mpz_class riemannian_argument(std::uint64_t n) {
    if (n == 0) throw InputError("Riemannian argument is undefined at n = 0");
    const mpz_class d = u(n) * u(n) + u(n);
    return d * (pow2((d - 2) / 2) + 5);
}

namespace {

BoundExpr scaled(std::uint64_t b, const mpz_class& m, const BoundLimits& limits) {
    if (b < 1) throw InputError("component count b must be >= 1");
    return BoundExpr::product({BoundExpr::exact(u(b)), BoundExpr::power(jordan_gl(m, limits), b)});
}

}  // namespace

BoundExpr bound_lie(GroupDims dims, const BoundLimits& limits) {
    return scaled(dims.b, lie_argument(dims.n), limits);
}

BoundExpr bound_lie_connected(std::uint64_t n, const BoundLimits& limits) {
    return bound_lie({n, 1}, limits);
}

BoundExpr bound_algebraic(GroupDims dims, const BoundLimits& limits) {
    return scaled(dims.b, algebraic_argument(dims.n), limits);
}

BoundExpr bound_compact_complex(std::uint64_t n, const BoundLimits& limits) {
    return jordan_gl(compact_complex_argument(n), limits);
}

BoundExpr bound_hyperbolic(std::uint64_t n, const BoundLimits& limits) {
    return jordan_gl(hyperbolic_argument(n), limits);
}

BoundExpr stabilizer_bound_hyperbolic(std::uint64_t n, const BoundLimits& limits) {
    return jordan_gl(u(n), limits);
}

BoundExpr bound_riemannian(std::uint64_t n, const BoundLimits& limits) {
    if (n == 0) return BoundExpr::exact(1);
    return jordan_gl(riemannian_argument(n), limits);
}

std::vector<ConsistencyRow> consistency_rows(std::uint64_t n) {
    if (n < 1) throw InputError("consistency check needs n >= 1");
    auto row = [](std::string family, std::uint64_t cap, mpz_class stated) {
        return ConsistencyRow{std::move(family), cap, std::move(stated), lie_argument(cap)};
    };
    return {
        row("algebraic", 2 * n, algebraic_argument(n)),
        row("compact-complex", 2 * n * n + n, compact_complex_argument(n)),
        row("hyperbolic", 2 * n + n * n, hyperbolic_argument(n)),
        row("riemannian", n * (n + 1) / 2, riemannian_argument(n)),
    };
}

bool consistency_check_bounds(std::uint64_t n) {
    const auto rows = consistency_rows(n);
    return std::all_of(rows.begin(), rows.end(), [](const ConsistencyRow& r) { return r.ok(); });
}

}  // namespace liejordan
