#pragma once

#include "lgcy/cayley_fjrw.hpp"
#include "lgcy/polynomial_ring.hpp"
#include "lgcy/qm_polynomial.hpp"
#include "lgcy/report.hpp"

#include <string>

namespace lgcy {

/// d/dC2 with C2 = -E2/24, i.e. -24 d/dE2.
QMPolynomial d_dC2(const QMPolynomial& p);

/// d/dC2 Theta = -z^2 Theta and d/dC2 (1/Theta) = z^2 / Theta, coefficientwise through z^order.
Report prime_form_anomaly_check(int order);

/// For 1 <= g <= g_max: d/dC2 c_g = c_{g-1}, c_g = [z^{2g-1}](1/Theta); on the FJRW side the
/// one-point formula in X = -C E2/24, Y = C E4/24, Z = -C E6/108 is differentiated in X and
/// compared with the Cayley image of c_{g-1}.
Report hae_onepoint_check(int g_max, const CayleyFrame& frame);

/// The general HAE for ancestor correlation functions, as text. Not evaluated.
std::string hae_formula_text();

enum class Theory { curve, fermat_cubic };

const char* theory_name(Theory theory);
/// Variable family letter: t for the curve, s for the cubic.
char theory_family(Theory theory);

/// L_k on variables with index <= max_index; terms reaching outside are dropped.
DiffOperator virasoro_op(Theory theory, int k, int max_index);

/// [L_n, L_m] = (n - m) L_{n+m} on all monomials of degree <= 2 whose indices lie in
/// min(L - 1, L - max(n, m)), both via the symbolic bracket and by composition.
Report virasoro_commutator_check(int n, int m, int max_index, Theory theory);

/// All pairs -1 <= n, m <= k_max for both theories plus the curve/cubic relabeling identity.
Report virasoro_check(int k_max, int max_index);

/// exp(-t (q^0_0)^2 / 2 - t sum_k q^0_{k+1} d/dq^0_k) on polynomials in q^i_l with
/// l <= max_index, modulo total degree > max_degree.
class QuantizationS {
 public:
  QuantizationS(Rational t, int max_index, int max_degree, bool include_quadratic = true);

  Poly apply(const Poly& p) const;
  int max_index() const { return max_index_; }
  int max_degree() const { return max_degree_; }

 private:
  Poly generator(const Poly& p) const;

  Rational t_;
  int max_index_;
  int max_degree_;
  bool quadratic_;
};

/// Variable q^sector_index.
Var qvar(int sector, int index);

/// S(p) = S(1) p for polynomials in sector-3 variables, and S commutes with multiplication
/// by q^3_k and with d/dq^3_k (both up to the degree truncation).
Report quantization_check(const Rational& t, int max_index, int max_degree);

}  // namespace lgcy
