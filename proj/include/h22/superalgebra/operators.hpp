#pragma once

#include "h22/superalgebra/supernumber.hpp"

namespace h22::susy {

/// Order in which the two derivatives of the pair measure d_xi d_eta act.
/// `eta_inner` is the convention used throughout (d_eta applies first);
/// `xi_inner` exists only to demonstrate that the checks notice a sign flip.
enum class BerezinOrder { eta_inner, xi_inner };

/// Left derivative d/dg: move g to the front and delete it.
SuperNumber fermion_derive_left(const SuperNumber& a, FermionIndex g);

/// d_xi d_eta applied to a (d_eta innermost by default).
SuperNumber berezin_pair(const SuperNumber& a, int site, BerezinOrder order = BerezinOrder::eta_inner);

/// Applies every pair, sites N down to 1, and returns the top coefficient.
Coefficient berezin_all(const SuperNumber& a, BerezinOrder order = BerezinOrder::eta_inner);

/// Coefficient-wise d/dx_i or d/dy_i; r_i is differentiated through the chain rule.
SuperNumber boson_derive(const SuperNumber& a, BosonVar v);

/// Q = sum_i xi_i d_{x_i} + eta_i d_{y_i} + x_i d_{eta_i} - y_i d_{xi_i}.
SuperNumber apply_Q(const SuperNumber& a);

/// Even derivation sum_i x_i d_{y_i} - y_i d_{x_i} + xi_i d_{eta_i} - eta_i d_{xi_i},
/// the simultaneous rotation of the (x, y) and (xi, eta) planes. Equals Q^2.
SuperNumber rotation_generator(const SuperNumber& a);

/// z_i = r_i + xi_i eta_i / r_i, the terminating expansion of
/// sqrt(1 + x_i^2 + y_i^2 + 2 xi_i eta_i).
SuperNumber build_z(int sites, int site);

/// H_i = x_i^2 + y_i^2 + 2 xi_i eta_i.
SuperNumber build_H(int sites, int site);

/// lambda_i = x_i eta_i - y_i xi_i, with Q(lambda_i) = H_i.
SuperNumber build_lambda(int sites, int site);

/// v_i . v_j = x_i x_j + y_i y_j - z_i z_j + xi_i eta_j + xi_j eta_i.
SuperNumber inner_product(int sites, int i, int j);

/// Exact inverse of an even element with unit body: invert the body and
/// sum the terminating geometric series in the nilpotent part.
SuperNumber invert_even(const SuperNumber& a);

/// exp(a) for a nilpotent even element (zero body); the series terminates.
SuperNumber exp_nilpotent(const SuperNumber& a);

}  // namespace h22::susy
