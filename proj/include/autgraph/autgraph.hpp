#pragma once

#include "autgraph/rational.hpp"
#include "autgraph/multigraph.hpp"
#include "autgraph/structure.hpp"
#include "autgraph/canon.hpp"
#include "autgraph/linear_combination.hpp"
#include "autgraph/ops.hpp"
#include "autgraph/family.hpp"
#include "autgraph/recursion.hpp"
#include "autgraph/io.hpp"
#include "autgraph/cache.hpp"
#include "autgraph/verify.hpp"
#include "autgraph/commands.hpp"
