#ifndef CYLSCHUR_XPOLY_HPP
#define CYLSCHUR_XPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "cylschur/bigint.hpp"
#include "cylschur/epoly.hpp"

namespace cylschur {

// Exact polynomial in the monomial basis of x_1..x_n.  Exponents may go
// negative transiently (marked-tableau weights divide by a variable); any
// final family sum is checked nonnegative by callers that rely on it.
class XPoly {
  public:
    using Key = std::vector<int>;  // Key[i] = exponent of x_{i+1}
    using Terms = std::map<Key, Int>;

    explicit XPoly(int num_vars = 1) : n_(num_vars) {}

    static XPoly zero(int n) { return XPoly(n); }
    static XPoly constant(int n, Int c);
    static XPoly monomial(int n, const Key& key, Int c);

    int num_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    static int key_degree(const Key& k);

    void add_term(const Key& key, const Int& c, DegCap cap = {});

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        return mul(a, b, {});
    }
    bool operator==(const XPoly&) const = default;

    static XPoly mul(const XPoly& a, const XPoly& b, DegCap cap);
    XPoly truncated(DegCap cap) const;

    Int coeff(const Key& key) const;
    bool all_exponents_nonnegative() const;

    std::string to_string() const;

  private:
    int n_;
    Terms terms_;
};

// e_k in n variables as an XPoly.
XPoly elementary_xpoly(int n, int k);

// Exact expansion into x-monomials, truncated at total degree cap.
XPoly monomial_expand(const EPoly& p, DegCap cap = {});

}  // namespace cylschur

#endif
