#include "rankcode/linpoly.hpp"

#include "rankcode/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rankcode {

LinPoly lp_zero() { return {}; }

LinPoly lp_identity(const Field& f) { return LinPoly{{f.one()}}; }

LinPoly lp_monomial(const Field& f, unsigned i, Ext c) {
    if (c.is_zero()) return {};
    LinPoly p;
    p.coeffs.assign(i + 1, f.zero());
    p.coeffs[i] = std::move(c);
    return p;
}

void lp_trim(LinPoly& p) {
    while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
}

LinPoly lp_from_coeffs(const Field& f, std::vector<Ext> coeffs) {
    for (const Ext& c : coeffs)
        if (c.c.size() != f.m()) throw std::invalid_argument("coefficient from mismatched field");
    LinPoly p{std::move(coeffs)};
    lp_trim(p);
    return p;
}

LinPoly lp_add(const Field& f, const LinPoly& a, const LinPoly& b) {
    LinPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] = f.add(r.coeffs[i], a.coeffs[i]);
        if (i < b.coeffs.size()) r.coeffs[i] = f.add(r.coeffs[i], b.coeffs[i]);
    }
    lp_trim(r);
    return r;
}

LinPoly lp_sub(const Field& f, const LinPoly& a, const LinPoly& b) {
    LinPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] = f.add(r.coeffs[i], a.coeffs[i]);
        if (i < b.coeffs.size()) r.coeffs[i] = f.sub(r.coeffs[i], b.coeffs[i]);
    }
    lp_trim(r);
    return r;
}

LinPoly lp_scale(const Field& f, const Ext& c, const LinPoly& a) {
    if (c.is_zero()) return {};
    LinPoly r = a;
    for (Ext& v : r.coeffs) v = f.mul(c, v);
    return r;
}

Ext eval(const Field& f, const LinPoly& p, const Ext& beta) {
    Ext acc = f.zero();
    Ext pow = beta;  // beta^{[i]}
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i > 0) pow = f.frob_pow(pow, 1);
        if (!p.coeffs[i].is_zero()) acc = f.add(acc, f.mul(p.coeffs[i], pow));
    }
    return acc;
}

namespace {

bool is_identity(const LinPoly& p) {
    return p.coeffs.size() == 1 && !p.coeffs[0].is_zero() && p.coeffs[0].c[0] == 1 &&
           [&] {
               for (size_t i = 1; i < p.coeffs[0].c.size(); ++i)
                   if (p.coeffs[0].c[i]) return false;
               return true;
           }();
}

}  // namespace

LinPoly symbolic_product(const Field& f, const LinPoly& a, const LinPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (is_identity(a)) return b;
    if (is_identity(b)) return a;
    LinPoly p;
    p.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            p.coeffs[i + j] = f.add(p.coeffs[i + j], f.mul(a.coeffs[i], f.frob_pow(b.coeffs[j], long(i))));
        }
    }
    lp_trim(p);
    return p;
}

LinPoly q_reverse(const Field& f, const LinPoly& p, unsigned t) {
    if (long(t) < p.q_degree()) throw std::invalid_argument("q_reverse ceiling below degree");
    LinPoly r;
    r.coeffs.assign(t + 1, f.zero());
    for (unsigned i = 0; i <= t; ++i) {
        const unsigned src = t - i;
        if (src < p.coeffs.size() && !p.coeffs[src].is_zero())
            r.coeffs[i] = f.frob_pow(p.coeffs[src], long(i) - long(t));
    }
    lp_trim(r);
    return r;
}

LinPoly min_poly(const Field& f, const std::vector<Ext>& s) {
    // M_{S u {a}} = M_{M_S(a)} (x) M_S; zero or dependent elements drop out
    LinPoly m = lp_identity(f);
    for (const Ext& a : s) {
        Ext t = eval(f, m, a);
        if (t.is_zero()) continue;
        // minimal polynomial of <t>: x^{[1]} - t^{q-1} x
        LinPoly step;
        step.coeffs.assign(2, f.zero());
        step.coeffs[1] = f.one();
        step.coeffs[0] = f.neg(f.mul(f.frob_pow(t, 1), f.inv(t)));
        m = symbolic_product(f, step, m);
    }
    return m;
}

std::vector<Ext> root_space_basis(const Field& f, const LinPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root space of the zero polynomial");
    const unsigned m = f.m();
    // matrix of beta -> p(beta) on the polynomial basis, columns indexed by basis element
    MatQ M(f.q(), m, m);
    for (unsigned j = 0; j < m; ++j) {
        Ext img = eval(f, p, f.basis_elem(j));
        for (unsigned i = 0; i < m; ++i) M.at(i, j) = img.c[i];
    }
    // kernel basis from RRE: free columns parameterize solutions
    RreResult red = rre(M);
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    std::vector<Ext> basis;
    for (unsigned freec = 0; freec < m; ++freec) {
        if (is_pivot[freec]) continue;
        Ext v = f.zero();
        v.c[freec] = 1;
        for (size_t r = 0; r < red.pivots.size(); ++r)
            v.c[red.pivots[r]] = fq::neg(red.R.at(r, freec), f.q());
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<LinPoly, LinPoly> symbolic_div_right(const Field& f, const LinPoly& a, const LinPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("symbolic division by zero");
    LinPoly rem = a, quot = lp_zero();
    const long dg = g.q_degree();
    const Ext& glead = g.coeffs[size_t(dg)];
    while (rem.q_degree() >= dg) {
        const long shift = rem.q_degree() - dg;
        // leading coefficient of (c x^{[shift]}) (x) g is c * glead^{[shift]}
        Ext c = f.mul(rem.coeffs.back(), f.inv(f.frob_pow(glead, shift)));
        LinPoly term = lp_monomial(f, unsigned(shift), c);
        quot = lp_add(f, quot, term);
        rem = lp_sub(f, rem, symbolic_product(f, term, g));
    }
    return {quot, rem};
}

std::pair<LinPoly, LinPoly> symbolic_div_left(const Field& f, const LinPoly& a, const LinPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("symbolic division by zero");
    LinPoly rem = a, quot = lp_zero();
    const long dg = g.q_degree();
    const Ext& glead = g.coeffs[size_t(dg)];
    while (rem.q_degree() >= dg) {
        const long shift = rem.q_degree() - dg;
        // leading coefficient of g (x) (c x^{[shift]}) is glead * c^{[dg]}
        Ext c = f.frob_pow(f.mul(rem.coeffs.back(), f.inv(glead)), -dg);
        LinPoly term = lp_monomial(f, unsigned(shift), c);
        quot = lp_add(f, quot, term);
        rem = lp_sub(f, rem, symbolic_product(f, g, term));
    }
    return {quot, rem};
}

std::string lp_to_string(const Field& f, const LinPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(";
        for (size_t j = 0; j < f.m(); ++j) {
            if (j) os << ",";
            os << p.coeffs[i].c[j];
        }
        os << ")";
        if (i == 0)
            os << "*x";
        else
            os << "*x^[" << i << "]";
    }
    return os.str();
}

}  // namespace rankcode
