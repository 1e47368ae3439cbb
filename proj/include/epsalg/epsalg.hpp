#pragma once

#include "epsalg/catalog.hpp"
#include "epsalg/deformation.hpp"
#include "epsalg/errors.hpp"
#include "epsalg/expr.hpp"
#include "epsalg/free_algebra.hpp"
#include "epsalg/graded_linear.hpp"
#include "epsalg/grading.hpp"
#include "epsalg/noa.hpp"
#include "epsalg/poisson.hpp"
#include "epsalg/presets.hpp"
#include "epsalg/report.hpp"
#include "epsalg/rewrite.hpp"
#include "epsalg/sampling.hpp"
#include "epsalg/scalar.hpp"
#include "epsalg/spec_file.hpp"
