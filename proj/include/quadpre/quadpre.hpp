#pragma once

#include "quadpre/bigint.hpp"
#include "quadpre/dynamics.hpp"
#include "quadpre/elliptic.hpp"
#include "quadpre/error.hpp"
#include "quadpre/factor.hpp"
#include "quadpre/models.hpp"
#include "quadpre/numfield.hpp"
#include "quadpre/qpoly.hpp"
#include "quadpre/rat.hpp"
#include "quadpre/resultant.hpp"
#include "quadpre/search.hpp"
#include "quadpre/serialize.hpp"
#include "quadpre/surfaces.hpp"
#include "quadpre/torsion.hpp"
