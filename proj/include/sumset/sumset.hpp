#pragma once

#include "sumset/bounds.hpp"
#include "sumset/combinatorics.hpp"
#include "sumset/engine.hpp"
#include "sumset/error.hpp"
#include "sumset/int_set.hpp"
#include "sumset/report_json.hpp"
#include "sumset/set_format.hpp"
#include "sumset/structure.hpp"
#include "sumset/sum_bitmap.hpp"
#include "sumset/verifier.hpp"
