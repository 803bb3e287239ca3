#pragma once

// Jordan-constant bounds. J(m), the Jordan constant of GL_m over an
// algebraically closed field of characteristic zero, is (m+1)! for m >= 71 and
// m in {63, 65, 67, 69}; other m stay symbolic. J(0) = 1 is a convention.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace liejordan {

class BoundExpr {
public:
    enum class Kind { Exact, SymbolicJ, Product, Power };

    static BoundExpr exact(mpz_class value);
    static BoundExpr symbolic_j(std::uint64_t m);
    /// Normalizing constructors: exact operands collapse, unit factors and
    /// exponent 1 disappear.
    static BoundExpr product(std::vector<BoundExpr> operands);
    static BoundExpr power(BoundExpr base, std::uint64_t exponent);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    const mpz_class& value() const { return value_; }
    std::uint64_t arg() const { return arg_; }
    const std::vector<BoundExpr>& operands() const { return operands_; }
    std::uint64_t exponent() const { return exponent_; }

    /// "J(54)", "2 * J(54)^2", or the decimal value.
    std::string to_string() const;

    nlohmann::json to_json() const;
    static BoundExpr from_json(const nlohmann::json& j);

    bool operator==(const BoundExpr& o) const;

private:
    Kind kind_ = Kind::Exact;
    mpz_class value_ = 1;
    std::uint64_t arg_ = 0;
    std::vector<BoundExpr> operands_;  // Product operands, or the single Power base
    std::uint64_t exponent_ = 0;
};

/// Factorials above this argument are refused with ResourceLimit.
struct BoundLimits {
    std::uint64_t max_factorial_arg = 200000;
    std::uint64_t max_result_bits = std::uint64_t{1} << 26;
};

/// Component-group size: b_{G/G0} for Lie groups, [G:G0] for algebraic groups.
struct GroupDims {
    std::uint64_t n = 0;
    std::uint64_t b = 1;
};

/// Whether (m+1)! is the known value of J(m).
bool jordan_gl_is_known(const mpz_class& m);

BoundExpr jordan_gl(const mpz_class& m, const BoundLimits& limits = {});

// Arguments m fed to J(m) by each family bound.
mpz_class lie_argument(std::uint64_t n);               // n (2^n + 10)
mpz_class algebraic_argument(std::uint64_t n);         // n (2^(2n+1) + 20)
mpz_class compact_complex_argument(std::uint64_t n);   // (2n^2+n)(2^(2n^2+n) + 10)
mpz_class hyperbolic_argument(std::uint64_t n);        // (2n+n^2)(2^(2n+n^2) + 10)
mpz_class riemannian_argument(std::uint64_t n);        // (n^2+n)(2^((n^2+n-2)/2) + 5), n >= 1

/// b * J(n (2^n + 10))^b for an n-dimensional real Lie group.
BoundExpr bound_lie(GroupDims dims, const BoundLimits& limits = {});
BoundExpr bound_lie_connected(std::uint64_t n, const BoundLimits& limits = {});
/// b * J(n (2^(2n+1) + 20))^b for an n-dimensional algebraic group with b components.
BoundExpr bound_algebraic(GroupDims dims, const BoundLimits& limits = {});
/// Identity components of automorphism groups of compact complex n-folds.
BoundExpr bound_compact_complex(std::uint64_t n, const BoundLimits& limits = {});
/// Identity components of automorphism groups of Kobayashi-hyperbolic n-folds.
BoundExpr bound_hyperbolic(std::uint64_t n, const BoundLimits& limits = {});
/// Stabilizer of a point in the full automorphism group: J(n).
BoundExpr stabilizer_bound_hyperbolic(std::uint64_t n, const BoundLimits& limits = {});
/// Identity components of isometry groups of Riemannian n-manifolds; n = 0 gives 1.
BoundExpr bound_riemannian(std::uint64_t n, const BoundLimits& limits = {});

struct ConsistencyRow {
    std::string family;
    std::uint64_t dimension_cap;  // m
    mpz_class stated;             // the family's own J-argument
    mpz_class via_lie;            // m (2^m + 10)
    bool ok() const { return stated == via_lie; }
};

/// Each family argument against lie_argument at its dimension cap.
std::vector<ConsistencyRow> consistency_rows(std::uint64_t n);
bool consistency_check_bounds(std::uint64_t n);

}  // namespace liejordan
