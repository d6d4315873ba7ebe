#pragma once

#include "cfc/block.hpp"
#include "cfc/cw_dp.hpp"
#include "cfc/dh.hpp"
#include "cfc/exact.hpp"
#include "cfc/extension.hpp"
#include "cfc/families.hpp"
#include "cfc/geo_coloring.hpp"
#include "cfc/geometry.hpp"
#include "cfc/graph.hpp"
#include "cfc/interval.hpp"
#include "cfc/io.hpp"
#include "cfc/kneser.hpp"
#include "cfc/named.hpp"
#include "cfc/random.hpp"
#include "cfc/split.hpp"
#include "cfc/wexpr.hpp"
