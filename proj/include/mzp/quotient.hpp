#ifndef MZP_QUOTIENT_HPP
#define MZP_QUOTIENT_HPP

#include <mutex>
#include <utility>
#include <vector>

#include "mzp/int_poly.hpp"
#include "mzp/newton.hpp"
#include "mzp/orbit.hpp"
#include "mzp/resultant.hpp"

namespace mzp {

/* Arithmetic in Z[c]/(G) for a monic modulus G. The context owns a
 * monotonically growing cache of the power sums of the roots of G, which
 * makes traces O(deg G) per element after warm-up. Contexts are identified
 * by address; residues of different contexts never mix.
 */
class QuotientCtx {
public:
    explicit QuotientCtx(IntPoly modulus, const Budget& budget = {}) : g_(std::move(modulus)) {
        if (!g_.is_monic() || g_.degree() < 1)
            throw precondition_violated("quotient modulus must be monic of degree >= 1");
        check_budget(g_.degree(), budget, "quotient context");
    }
    QuotientCtx(const QuotientCtx&) = delete;
    QuotientCtx& operator=(const QuotientCtx&) = delete;

    const IntPoly& modulus() const { return g_; }
    long degree() const { return g_.degree(); }

    // s_j for j <= J, with s_0 = deg G
    void ensure_power_sums(unsigned long J) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (psums_.empty()) psums_.push_back(Int(g_.degree()));
        const unsigned long k = static_cast<unsigned long>(g_.degree());
        while (psums_.size() <= J) {
            const unsigned long j = psums_.size();
            Int acc(0);
            const unsigned long top = std::min(j - 1, k);
            for (unsigned long i = 1; i <= top; i++)
                mpz_addmul(acc.get_mpz_t(), g_[k - i].get_mpz_t(), psums_[j - i].get_mpz_t());
            if (j <= k) acc += g_[k - j] * j;
            psums_.push_back(-acc);
        }
    }

    Int power_sum(unsigned long j) const {
        ensure_power_sums(j);
        std::lock_guard<std::mutex> lock(mu_);
        return psums_[j];
    }

    // trace of (f mod G) as an element of the quotient algebra:
    // sum_j f_j s_j, equal to the sum of f over the roots of G with
    // multiplicity
    Int trace_of_reduced(const IntPoly& f) const {
        if (f.degree() >= g_.degree()) throw precondition_violated("trace_of needs a reduced representative");
        if (f.is_zero()) return Int(0);
        ensure_power_sums(static_cast<unsigned long>(f.degree()));
        std::lock_guard<std::mutex> lock(mu_);
        Int acc(0);
        for (std::size_t j = 0; j < f.size(); j++)
            mpz_addmul(acc.get_mpz_t(), f[j].get_mpz_t(), psums_[j].get_mpz_t());
        return acc;
    }

private:
    IntPoly g_;
    mutable std::vector<Int> psums_;
    mutable std::mutex mu_;
};

class Residue {
public:
    Residue(const QuotientCtx& ctx, IntPoly reduced) : ctx_(&ctx), p_(std::move(reduced)) {}

    const IntPoly& poly() const { return p_; }
    const QuotientCtx& ctx() const { return *ctx_; }

    bool operator==(const Residue& o) const { return ctx_ == o.ctx_ && p_ == o.p_; }

private:
    const QuotientCtx* ctx_;
    IntPoly p_;
};

inline Residue reduce(const QuotientCtx& ctx, const IntPoly& f) {
    if (f.degree() < ctx.degree()) return Residue(ctx, f);
    return Residue(ctx, rem_by_monic(f, ctx.modulus()));
}

inline Residue mod_mul(const Residue& a, const Residue& b) {
    if (&a.ctx() != &b.ctx()) throw ctx_mismatch();
    return reduce(a.ctx(), a.poly() * b.poly());
}

inline Residue mod_pow(const Residue& a, unsigned long e) {
    Residue r(a.ctx(), IntPoly{1});
    if (a.ctx().degree() == 0) return r;
    Residue b = a;
    while (e) {
        if (e & 1) r = mod_mul(r, b);
        e >>= 1;
        if (e) b = mod_mul(b, b);
    }
    return r;
}

inline Int trace_of(const Residue& f) { return f.ctx().trace_of_reduced(f.poly()); }

/* T(f, g): the sum of f over the roots of g, with multiplicity. Computed as
 * the trace of f in Z[c]/(g); additive in g and linear in f.
 */
inline Int T_sum(const IntPoly& f, const QuotientCtx& ctx) { return trace_of(reduce(ctx, f)); }

inline Int T_sum(const IntPoly& f, const IntPoly& g, const Budget& budget = {}) {
    if (g.is_zero() || !g.is_monic()) throw precondition_violated("T needs a monic nonzero g");
    if (g.degree() == 0) return Int(0);
    QuotientCtx ctx(g, budget);
    return T_sum(f, ctx);
}

/* T(f, g) by the residue formula: with h the remainder of f g' modulo g/c,
 *   T(f, g) = -h(0) / g'(0),
 * valid when f(0) = g(0) = 0, g'(0) != 0 and g is squarefree. Each
 * hypothesis is checked; failures are reported, never absorbed. Serves as
 * an independent route to the trace-based T.
 */
inline Int T_residue(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero() || !g.is_monic()) throw precondition_violated("g monic nonzero");
    if (!f.is_zero() && f[0] != 0) throw precondition_violated("f(0) = 0");
    if (g[0] != 0) throw precondition_violated("g(0) = 0");
    const Int gp0 = g[1]; // g'(0)
    if (gp0 == 0) throw precondition_violated("g'(0) != 0");
    if (!is_squarefree(g)) throw precondition_violated("g squarefree");

    const IntPoly gq = exact_div(g, IntPoly::variable());
    Int h0;
    if (gq.degree() == 0) {
        h0 = 0; // g = c: the only root is 0 and f vanishes there
    } else {
        h0 = rem_by_monic(f * g.derivative(), gq)[0];
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), h0.get_mpz_t(), gp0.get_mpz_t());
    if (r != 0) throw non_integral_result("-h(0)/g'(0) is not an integer");
    return -q;
}

} // namespace mzp

#endif
