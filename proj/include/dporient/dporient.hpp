#pragma once

#include "dporient/aux_digraph.hpp"
#include "dporient/caps.hpp"
#include "dporient/correspondence.hpp"
#include "dporient/decomposition.hpp"
#include "dporient/dot.hpp"
#include "dporient/euler.hpp"
#include "dporient/field.hpp"
#include "dporient/fixtures.hpp"
#include "dporient/graph.hpp"
#include "dporient/json_io.hpp"
#include "dporient/pipeline.hpp"
#include "dporient/polynomial.hpp"
#include "dporient/random_gen.hpp"
#include "dporient/solver.hpp"
