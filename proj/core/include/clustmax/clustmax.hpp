#pragma once

#include "clustmax/canonical.hpp"
#include "clustmax/clustering.hpp"
#include "clustmax/dense_graph.hpp"
#include "clustmax/enumeration.hpp"
#include "clustmax/error.hpp"
#include "clustmax/generators.hpp"
#include "clustmax/graph.hpp"
#include "clustmax/graph6.hpp"
#include "clustmax/harness.hpp"
#include "clustmax/rational.hpp"
#include "clustmax/structure.hpp"
