#pragma once

// Umbrella header.

#include "adecover/belyi.hpp"
#include "adecover/binary_form.hpp"
#include "adecover/classify.hpp"
#include "adecover/cover_engine.hpp"
#include "adecover/hj.hpp"
#include "adecover/io.hpp"
#include "adecover/monodromy.hpp"
#include "adecover/numeric.hpp"
#include "adecover/perm.hpp"
#include "adecover/poly.hpp"
#include "adecover/pullback.hpp"
#include "adecover/quad_field.hpp"
#include "adecover/resolution.hpp"
