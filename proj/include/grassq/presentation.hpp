// Schur-determinant generator polynomials, Whitney-sum style evaluation, and
// verification of the classical and quantum ring presentations inside the
// computed rings. Relations are checked by evaluating LHS-RHS through the
// Pieri engines and asserting the zero element, not by normal forms.

#pragma once

#include <string>
#include <vector>

#include "grassq/gw.hpp"

namespace grassq {

using GeneratorPolynomial = SpecialPolynomial;

enum class DetFlavor { C_d, B_weighted, D_Delta };

// d_r = det(a_{1+j-i}) expanded through d_r = a_1 d_{r-1} - a_2 d_{r-2} + ...
// a_i is sigma_i (C_d), delta_i tau_i with delta_i = 1 for i <= k and 2
// otherwise (B_weighted), or c_i(Q) rewritten in the tau generators
// (D_Delta: c_k = tau_k + tau'_k, c_i = 2 tau_i above k).
GeneratorPolynomial schur_determinant(const GrassmannianSpec& spec, int r, DetFlavor flavor);

DetFlavor default_flavor(const GrassmannianSpec& spec);

RingElement evaluate(Engine& engine, const GeneratorPolynomial& poly, ProductMode mode);

struct RelationCheck {
    std::string name;
    bool pass = false;
    RingElement residual;  // evaluated LHS-RHS; empty iff pass
};

struct PresentationReport {
    std::vector<RelationCheck> relations;
    bool pass = true;
};

// Evaluates every relation of the space's presentation (classical or quantum,
// with the printed quantum right-hand sides) and reports residuals.
PresentationReport verify_presentation(Engine& engine, ProductMode mode);

struct BasisReport {
    bool unitriangular = false;  // monomials over the basis, classical, fixed order
    bool rank_matches = false;   // #basis = prod deg(relations) / prod deg(generators)
    long long basis_size = 0;
    bool pass() const { return unitriangular && rank_matches; }
};

BasisReport basis_check(Engine& engine);

}  // namespace grassq
