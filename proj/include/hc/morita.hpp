#pragma once

// The Morita maps between (M_ell(D), ad_Phi), (M_ell(D), theta^t) and (D, theta).

#include "hc/forms.hpp"

namespace hc {

/// (M, h) -> (M, Phi^{-1} h): every Gram block is left-multiplied by Phi^{-1}.
HermitianForm scale_involution(const HermitianForm& h);

/// Reads the k x k grid of ell x ell blocks as one (k ell)-square Gram matrix
/// over (D, theta). Requires a theta^t form.
HermitianForm collapse(const HermitianForm& h);

/// Inverse of collapse for a form over (D, theta) whose rank is a multiple of ell.
HermitianForm expand(const HermitianForm& b, int ell);

/// collapse(scale_involution(h)).
HermitianForm full_reduction(const HermitianForm& h);

}  // namespace hc
