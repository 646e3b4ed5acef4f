#pragma once

#include "dearr/error.hpp"
#include "dearr/exactgeom.hpp"
#include "dearr/faces.hpp"
#include "dearr/generate.hpp"
#include "dearr/io.hpp"
#include "dearr/matrix.hpp"
#include "dearr/polynomial.hpp"
#include "dearr/poset.hpp"
#include "dearr/rational.hpp"
#include "dearr/verify.hpp"
#include "dearr/wiring.hpp"
