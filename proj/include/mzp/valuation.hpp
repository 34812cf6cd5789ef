#ifndef MZP_VALUATION_HPP
#define MZP_VALUATION_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "mzp/errors.hpp"
#include "mzp/int_poly.hpp"

namespace mzp {

/* A 2-adic (or p-adic) valuation that may be known exactly, known only as a
 * floor "at least K" (from truncated arithmetic), or infinite (valuation of
 * zero). Comparisons are decided only when logically forced; anything else
 * throws ambiguous_valuation so the caller can raise precision instead of
 * guessing.
 */
class Valuation {
public:
    enum class Kind { Exact, AtLeast, Infinite };

    static Valuation exact(unsigned long v) { return Valuation(Kind::Exact, v); }
    static Valuation at_least(unsigned long k) { return Valuation(Kind::AtLeast, k); }
    static Valuation infinite() { return Valuation(Kind::Infinite, 0); }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    unsigned long value() const {
        if (kind_ != Kind::Exact) throw ambiguous_valuation();
        return v_;
    }
    unsigned long floor_value() const {
        // a lower bound valid for every kind
        return kind_ == Kind::Infinite ? ~0ul : v_;
    }

    // is this valuation provably > w?
    bool greater_than(unsigned long w) const {
        switch (kind_) {
            case Kind::Exact: return v_ > w;
            case Kind::Infinite: return true;
            case Kind::AtLeast:
                if (v_ > w) return true;
                throw ambiguous_valuation();
        }
        return false;
    }

    // is this valuation provably <= w? (negation of greater_than with the
    // same ambiguity rule)
    bool at_most(unsigned long w) const { return !greater_than(w); }

    bool operator==(const Valuation& o) const { return kind_ == o.kind_ && v_ == o.v_; }
    bool operator!=(const Valuation& o) const { return !(*this == o); }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Exact: return std::to_string(v_);
            case Kind::AtLeast: return ">=" + std::to_string(v_);
            case Kind::Infinite: return "inf";
        }
        return "";
    }

private:
    Valuation(Kind k, unsigned long v) : kind_(k), v_(v) {}
    Kind kind_;
    unsigned long v_;
};

inline std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

inline Valuation v2_of(const Int& z) {
    if (z == 0) return Valuation::infinite();
    return Valuation::exact(mpz_scan1(z.get_mpz_t(), 0));
}

// p-adic valuation for any prime p (exact integers only)
inline Valuation vp_of(const Int& z, const Int& p) {
    if (z == 0) return Valuation::infinite();
    Int q;
    const unsigned long v = mpz_remove(q.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    return Valuation::exact(v);
}

} // namespace mzp

#endif
