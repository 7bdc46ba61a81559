#pragma once

#include "congrlab/binomsums.hpp"
#include "congrlab/catalog/check.hpp"
#include "congrlab/catalog/congruences.hpp"
#include "congrlab/catalog/env.hpp"
#include "congrlab/catalog/identities.hpp"
#include "congrlab/catalog/padic.hpp"
#include "congrlab/catalog/report.hpp"
#include "congrlab/catalog/runner.hpp"
#include "congrlab/error.hpp"
#include "congrlab/harmonic.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/poly.hpp"
#include "congrlab/quadext.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/ring_traits.hpp"
#include "congrlab/sequences.hpp"
#include "congrlab/specialnum.hpp"
