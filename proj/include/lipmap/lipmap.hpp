#pragma once

#include "lipmap/error.hpp"
#include "lipmap/extend.hpp"
#include "lipmap/graph.hpp"
#include "lipmap/interval.hpp"
#include "lipmap/io.hpp"
#include "lipmap/lhom.hpp"
#include "lipmap/mapping.hpp"
#include "lipmap/maxrange.hpp"
#include "lipmap/oracle.hpp"
#include "lipmap/range_extend.hpp"
