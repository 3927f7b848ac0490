#pragma once

#include "copfaces/config.hpp"
#include "copfaces/copreg.hpp"
#include "copfaces/dual.hpp"
#include "copfaces/errors.hpp"
#include "copfaces/faces.hpp"
#include "copfaces/geometry.hpp"
#include "copfaces/index_set.hpp"
#include "copfaces/linalg.hpp"
#include "copfaces/lp.hpp"
#include "copfaces/oracle.hpp"
#include "copfaces/scalar.hpp"
#include "copfaces/simplex_vector.hpp"
#include "copfaces/sym_matrix.hpp"
#include "copfaces/zeros.hpp"
