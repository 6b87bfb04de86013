#pragma once

#include "semidirect/algebra.hpp"
#include "semidirect/derivations.hpp"
#include "semidirect/errors.hpp"
#include "semidirect/linalg.hpp"
#include "semidirect/products.hpp"
#include "semidirect/rational.hpp"
#include "semidirect/standard_algebras.hpp"
#include "semidirect/tensor.hpp"
#include "semidirect/theorems.hpp"
#include "semidirect/version.hpp"
