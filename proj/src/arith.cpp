#include "gspline/arith.hpp"

#include <algorithm>

namespace gspline {

ModulusContext ModulusContext::create(const Int& m, unsigned long trial_bound) {
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2, got " + m.get_str());

    std::vector<std::pair<Int, unsigned>> factors;
    Int rest = m;
    for (Int p = 2; p * p <= rest && p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (rest > 1) {
        // Any surviving cofactor below bound^2 has no divisor <= bound, so it is prime.
        Int bound2 = Int(trial_bound) * Int(trial_bound);
        if (rest > bound2 && mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0)
            throw std::invalid_argument("modulus has a factor beyond the trial-division bound: " +
                                        rest.get_str());
        factors.emplace_back(rest, 1);
    }
    std::sort(factors.begin(), factors.end());
    return ModulusContext(m, std::move(factors));
}

Int ModulusContext::canonical_label(const Int& l) const {
    if (l < 0) throw std::invalid_argument("labels must be nonnegative");
    return gcd(l, m_);  // gcd(0, m) = m, the zero ideal
}

Int ModulusContext::reduce(const Int& x) const {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m_.get_mpz_t());
    return r;
}

LcmResult lcm_reduced(const std::set<Int>& values, const ModulusContext& ctx) {
    if (values.empty())
        throw std::invalid_argument("lcm_reduced: empty set");
    Int l = 1;
    for (const Int& v : values) {
        if (v <= 0 || ctx.modulus() % v != 0)
            throw std::invalid_argument("lcm_reduced: " + v.get_str() + " does not divide m");
        l = lcm(l, v);
    }
    return {l, l == ctx.modulus()};
}

Int parse_int_expr(const std::string& s) {
    // product of '*'-separated factors, each "base" or "base^exp"
    Int result = 1;
    size_t pos = 0;
    if (s.empty()) throw std::invalid_argument("empty integer expression");
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        std::string term = s.substr(pos, star == std::string::npos ? star : star - pos);
        size_t caret = term.find('^');
        Int base;
        unsigned long exp = 1;
        try {
            if (caret == std::string::npos) {
                base = Int(term);
            } else {
                base = Int(term.substr(0, caret));
                exp = std::stoul(term.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer expression: " + s);
        }
        Int powed;
        mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), exp);
        result *= powed;
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return result;
}

}  // namespace gspline
