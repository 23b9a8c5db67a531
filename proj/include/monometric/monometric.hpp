#pragma once

#include "monometric/bloch.hpp"
#include "monometric/channels.hpp"
#include "monometric/classical.hpp"
#include "monometric/error.hpp"
#include "monometric/fuzz.hpp"
#include "monometric/hermitian.hpp"
#include "monometric/io.hpp"
#include "monometric/mc_functions.hpp"
#include "monometric/metric.hpp"
#include "monometric/pure_boundary.hpp"
#include "monometric/random.hpp"
