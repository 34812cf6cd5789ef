#ifndef MZP_INT_POLY_HPP
#define MZP_INT_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mzp/errors.hpp"

namespace mzp {

using Int = mpz_class;

/* Dense univariate polynomial over Z, coefficients stored constant term
 * first. Canonical form: the highest stored coefficient is nonzero, so the
 * zero polynomial is the empty vector and degree() == -1 for it. All
 * arithmetic is exact. The variable name is contextual (c in parameter
 * space, x in multiplier space) and only matters when printing.
 */
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> constant_first) : c_(constant_first) { trim(); }
    explicit IntPoly(std::vector<Int> constant_first) : c_(std::move(constant_first)) { trim(); }

    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static IntPoly monomial(std::size_t deg, Int coeff = 1) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(deg + 1, Int(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }
    static IntPoly variable() { return monomial(1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::size_t size() const { return c_.size(); }

    const Int& operator[](std::size_t i) const {
        static const Int zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const {
        IntPoly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPoly operator+(const IntPoly& g) const {
        IntPoly r;
        r.c_.resize(std::max(c_.size(), g.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); i++) r.c_[i] = c_[i];
        for (std::size_t i = 0; i < g.c_.size(); i++) r.c_[i] += g.c_[i];
        r.trim();
        return r;
    }

    IntPoly operator-(const IntPoly& g) const {
        IntPoly r;
        r.c_.resize(std::max(c_.size(), g.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); i++) r.c_[i] = c_[i];
        for (std::size_t i = 0; i < g.c_.size(); i++) r.c_[i] -= g.c_[i];
        r.trim();
        return r;
    }

    IntPoly operator*(const IntPoly& g) const {
        if (is_zero() || g.is_zero()) return {};
        IntPoly r;
        mul_dispatch(c_.data(), c_.size(), g.c_.data(), g.c_.size(), r.c_);
        r.trim();
        return r;
    }

    IntPoly operator*(const Int& a) const {
        if (a == 0) return {};
        IntPoly r(*this);
        for (auto& v : r.c_) v *= a;
        return r;
    }

    IntPoly& operator+=(const IntPoly& g) { return *this = *this + g; }
    IntPoly& operator-=(const IntPoly& g) { return *this = *this - g; }
    IntPoly& operator*=(const IntPoly& g) { return *this = *this * g; }

    // f * c^k
    IntPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        IntPoly r;
        r.c_.assign(c_.size() + k, Int(0));
        std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(k));
        return r;
    }

    IntPoly derivative() const {
        if (degree() <= 0) return {};
        IntPoly r;
        r.c_.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); i++) r.c_.push_back(c_[i] * static_cast<unsigned long>(i));
        r.trim();
        return r;
    }

    Int eval(const Int& x) const {
        Int s(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            s *= x;
            s += c_[i];
        }
        return s;
    }

    IntPoly pow(unsigned long e) const {
        IntPoly r = constant(1);
        IntPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /* Long division by a monic divisor. The quotient and remainder are
     * integral exactly because g is monic; non-monic divisors are rejected
     * rather than handled over Q.
     */
    std::pair<IntPoly, IntPoly> divrem_by_monic(const IntPoly& g) const {
        if (!g.is_monic()) throw precondition_violated("divisor must be monic");
        const long dg = g.degree();
        if (dg == 0) return {*this, {}};
        if (degree() < dg) return {{}, *this};
        std::vector<Int> r = c_;
        std::vector<Int> q(c_.size() - static_cast<std::size_t>(dg), Int(0));
        for (std::size_t i = r.size(); i-- > static_cast<std::size_t>(dg);) {
            if (r[i] == 0) continue;
            Int& qi = q[i - static_cast<std::size_t>(dg)];
            qi = std::move(r[i]);
            r[i] = 0;
            for (long j = 0; j < dg; j++)
                mpz_submul(r[i - static_cast<std::size_t>(dg) + static_cast<std::size_t>(j)].get_mpz_t(),
                           qi.get_mpz_t(), g.c_[static_cast<std::size_t>(j)].get_mpz_t());
        }
        r.resize(static_cast<std::size_t>(dg));
        IntPoly quo(std::move(q)), rem(std::move(r));
        return {std::move(quo), std::move(rem)};
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Int& v = c_[i];
            if (v == 0) continue;
            const bool first = os.tellp() == std::streampos(0);
            if (v > 0 && !first) os << "+";
            if (i == 0) {
                os << v.get_str();
            } else {
                if (v == -1)
                    os << "-";
                else if (v != 1)
                    os << v.get_str();
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    /* Canonical text form: a version tag line, then the decimal
     * coefficients, constant term first, space-separated. The zero
     * polynomial is written as a single 0.
     */
    static constexpr const char* text_tag = "mzp.poly.v1";

    std::string to_canonical_text() const {
        std::ostringstream os;
        os << text_tag << "\n";
        if (is_zero()) {
            os << "0";
        } else {
            for (std::size_t i = 0; i < c_.size(); i++) {
                if (i) os << " ";
                os << c_[i].get_str();
            }
        }
        os << "\n";
        return os.str();
    }

    static IntPoly from_canonical_text(std::istream& in) {
        std::string tag;
        if (!std::getline(in, tag)) throw parse_error("empty polynomial file");
        if (!tag.empty() && tag.back() == '\r') tag.pop_back();
        if (tag != text_tag) throw parse_error("unknown polynomial format tag: " + tag);
        std::string line;
        if (!std::getline(in, line)) throw parse_error("missing coefficient line");
        std::istringstream ls(line);
        std::vector<Int> coeffs;
        std::string tok;
        while (ls >> tok) {
            try {
                coeffs.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw parse_error("bad coefficient: " + tok);
            }
        }
        return IntPoly(std::move(coeffs));
    }

    static IntPoly from_canonical_text(const std::string& s) {
        std::istringstream in(s);
        return from_canonical_text(in);
    }

private:
    std::vector<Int> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    // schoolbook below this operand length, Karatsuba above (tuning
    // constant, not semantics)
    static constexpr std::size_t kara_threshold = 40;

    static void mul_school(const Int* a, std::size_t la, const Int* b, std::size_t lb,
                           std::vector<Int>& out) {
        out.assign(la + lb - 1, Int(0));
        for (std::size_t i = 0; i < la; i++) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < lb; j++)
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }

    static void mul_dispatch(const Int* a, std::size_t la, const Int* b, std::size_t lb,
                             std::vector<Int>& out) {
        if (std::min(la, lb) <= kara_threshold) {
            mul_school(a, la, b, lb, out);
            return;
        }
        // split at h: a = a0 + x^h a1, b = b0 + x^h b1
        const std::size_t h = std::min(la, lb) / 2;
        std::vector<Int> z0, z2, z1;
        mul_dispatch(a, h, b, h, z0);
        mul_dispatch(a + h, la - h, b + h, lb - h, z2);
        std::vector<Int> sa(std::max(h, la - h), Int(0)), sb(std::max(h, lb - h), Int(0));
        for (std::size_t i = 0; i < h; i++) sa[i] = a[i];
        for (std::size_t i = h; i < la; i++) sa[i - h] += a[i];
        for (std::size_t i = 0; i < h; i++) sb[i] = b[i];
        for (std::size_t i = h; i < lb; i++) sb[i - h] += b[i];
        mul_dispatch(sa.data(), sa.size(), sb.data(), sb.size(), z1);
        for (std::size_t i = 0; i < z0.size(); i++) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); i++) z1[i] -= z2[i];
        out.assign(la + lb - 1, Int(0));
        for (std::size_t i = 0; i < z0.size(); i++) out[i] += z0[i];
        for (std::size_t i = 0; i < z1.size(); i++) out[i + h] += z1[i];
        for (std::size_t i = 0; i < z2.size(); i++) out[i + 2 * h] += z2[i];
    }
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

// remainder of f modulo the monic polynomial g; deg r < deg g
inline IntPoly rem_by_monic(const IntPoly& f, const IntPoly& g) {
    if (g.degree() < 1) throw precondition_violated("modulus must have degree >= 1");
    return f.divrem_by_monic(g).second;
}

// quotient f / g for monic g dividing f exactly
inline IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero() || !g.is_monic()) throw precondition_violated("divisor must be monic and nonzero");
    auto [q, r] = f.divrem_by_monic(g);
    if (!r.is_zero()) throw non_zero_remainder();
    return q;
}

} // namespace mzp

#endif
