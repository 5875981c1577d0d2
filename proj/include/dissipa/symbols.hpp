#pragma once

#include <string>

#include "dissipa/coefficient_system.hpp"
#include "dissipa/frequency.hpp"

namespace dissipa {

/// Odd/even splitting of the Fourier symbol at one frequency:
/// sum_alpha (i xi)^alpha L^alpha = i|xi| A(xi) + B(xi), with both factors real.
struct SymbolPair {
  Matrix a_sym;  // generalized transport symbol A(xi)
  Matrix b_sym;  // generalized viscosity symbol B(xi)
  FrequencyPoint at;
};

/// A(xi) = sum_{|a| odd} |xi|^{|a|-1} (-1)^{(|a|-1)/2} omega^a L^a,
/// B(xi) = sum_{|a| even} |xi|^{|a|} (-1)^{|a|/2} omega^a L^a.
SymbolPair assemble_symbols(const CoefficientSystem& sys, const FrequencyPoint& p);

/// sum_alpha (i xi)^alpha L^alpha; xi = 0 allowed (returns the order-zero block).
CMatrix raw_symbol(const CoefficientSystem& sys, const Vector& xi);

/// Roots of det(lambda A0 + i|xi| A(xi) + B(xi)) = 0 with eigenvector witnesses.
struct DispersionResult {
  FrequencyPoint at;
  CVector values;    // sorted by (Re, Im)
  CMatrix vectors;   // unit right-eigenvector columns, matching order
  Vector residuals;  // ||(lambda_k A0 + i|xi|A + B) v_k||
  bool ok = true;
  std::string message;  // set when !ok

  double max_re() const;
};

DispersionResult dispersion_eigenvalues(const CoefficientSystem& sys, const FrequencyPoint& p);

}  // namespace dissipa
