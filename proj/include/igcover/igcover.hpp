#pragma once

#include "igcover/approx.hpp"
#include "igcover/bounds.hpp"
#include "igcover/cover.hpp"
#include "igcover/errors.hpp"
#include "igcover/exact.hpp"
#include "igcover/generators.hpp"
#include "igcover/graph.hpp"
#include "igcover/hypergraph.hpp"
#include "igcover/io.hpp"
#include "igcover/three_partition.hpp"
