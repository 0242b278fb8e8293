#ifndef RANKCODE_LINPOLY_HPP
#define RANKCODE_LINPOLY_HPP

#include "rankcode/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rankcode {

// Linearized polynomial sum_i f_i x^{[i]} over F_{q^m}, [i] = q^i.
// coeffs[i] multiplies x^{[i]}; the zero polynomial has an empty coefficient list.
struct LinPoly {
    std::vector<Ext> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    // q-degree; -1 for the zero polynomial
    long q_degree() const { return long(coeffs.size()) - 1; }
};

LinPoly lp_zero();
LinPoly lp_identity(const Field& f);                    // x
LinPoly lp_monomial(const Field& f, unsigned i, Ext c); // c x^{[i]}
LinPoly lp_from_coeffs(const Field& f, std::vector<Ext> coeffs);
void lp_trim(LinPoly& p);

LinPoly lp_add(const Field& f, const LinPoly& a, const LinPoly& b);
LinPoly lp_sub(const Field& f, const LinPoly& a, const LinPoly& b);
LinPoly lp_scale(const Field& f, const Ext& c, const LinPoly& a);

Ext eval(const Field& f, const LinPoly& p, const Ext& beta);

// Symbolic product A(B(x)); q-degrees add.
LinPoly symbolic_product(const Field& f, const LinPoly& a, const LinPoly& b);

// q-reverse at ceiling degree t >= q_degree(f): rev_i = f_{t-i}^{[i-t]}.
LinPoly q_reverse(const Field& f, const LinPoly& p, unsigned t);

// Monic minimal linearized polynomial vanishing exactly on the span of s.
LinPoly min_poly(const Field& f, const std::vector<Ext>& s);

// Basis of { beta : p(beta) = 0 } via the kernel of the induced F_q-linear map.
std::vector<Ext> root_space_basis(const Field& f, const LinPoly& p);

// f = quot (x) g + rem, q_degree(rem) < q_degree(g); divide by the right factor g.
std::pair<LinPoly, LinPoly> symbolic_div_right(const Field& f, const LinPoly& a, const LinPoly& g);
// f = g (x) quot + rem
std::pair<LinPoly, LinPoly> symbolic_div_left(const Field& f, const LinPoly& a, const LinPoly& g);

std::string lp_to_string(const Field& f, const LinPoly& p);

}  // namespace rankcode

#endif
