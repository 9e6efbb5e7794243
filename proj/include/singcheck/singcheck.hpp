#pragma once

// Exact local singularity invariants for pairs (f, V = g^{-1}(0)) of germs:
// Milnor, Tjurina, Bruce-Roberts and Greuel numbers over Q, on top of a Mora
// tangent-cone standard-basis engine with an independent jet-truncation
// oracle.

#include "context.hpp"
#include "errors.hpp"
#include "form_modules.hpp"
#include "invariants.hpp"
#include "jet_oracle.hpp"
#include "log_derivations.hpp"
#include "modvec.hpp"
#include "monomial.hpp"
#include "parser.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "std_basis.hpp"
