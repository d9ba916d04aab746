#ifndef GSPLINE_ARITH_HPP
#define GSPLINE_ARITH_HPP

#include <gmpxx.h>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gspline {

using Int = mpz_class;

/// Modulus m >= 2 together with its prime factorization.
/// All residue and label canonicalization goes through this context.
class ModulusContext {
public:
    /// Factors m by trial division. Throws std::invalid_argument for m < 2
    /// or when a cofactor survives the trial-division bound.
    static ModulusContext create(const Int& m, unsigned long trial_bound = 1'000'000);

    const Int& modulus() const { return m_; }
    const std::vector<std::pair<Int, unsigned>>& factorization() const { return factors_; }

    bool is_prime_power() const { return factors_.size() == 1; }

    /// Canonical representative of the ideal <l> in Z/mZ: gcd(l, m).
    /// The zero ideal (l = 0) canonicalizes to m itself.
    Int canonical_label(const Int& l) const;

    /// Least nonnegative residue of x mod m.
    Int reduce(const Int& x) const;

private:
    ModulusContext(Int m, std::vector<std::pair<Int, unsigned>> factors)
        : m_(std::move(m)), factors_(std::move(factors)) {}

    Int m_;
    std::vector<std::pair<Int, unsigned>> factors_;
};

struct LcmResult {
    Int value;
    bool vanishes;  // true iff value == m, i.e. the lcm is 0 in Z/mZ
};

/// lcm of a nonempty set of positive divisors of m.
LcmResult lcm_reduced(const std::set<Int>& values, const ModulusContext& ctx);

/// Parses a decimal string (optionally with '^' and '*' as in "2^8*3^10*5^7").
Int parse_int_expr(const std::string& s);

}  // namespace gspline

#endif
