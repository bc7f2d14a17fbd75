#pragma once

#include "rcurve/errors.hpp"
#include "rcurve/rational.hpp"
#include "rcurve/poly.hpp"
#include "rcurve/quadext.hpp"
#include "rcurve/interval.hpp"
#include "rcurve/resultant.hpp"
#include "rcurve/factor.hpp"
#include "rcurve/sturm.hpp"
#include "rcurve/roots.hpp"
#include "rcurve/numfield.hpp"
#include "rcurve/mpoly.hpp"
#include "rcurve/hpoly2.hpp"
#include "rcurve/parser.hpp"
#include "rcurve/param.hpp"
#include "rcurve/curve_analysis.hpp"
#include "rcurve/classify.hpp"
#include "rcurve/witness.hpp"
#include "rcurve/oracle.hpp"
#include "rcurve/verify.hpp"
