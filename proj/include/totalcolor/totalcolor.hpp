#pragma once

#include "totalcolor/arith.hpp"
#include "totalcolor/classify.hpp"
#include "totalcolor/cliques.hpp"
#include "totalcolor/coloring.hpp"
#include "totalcolor/coloring_io.hpp"
#include "totalcolor/constructions.hpp"
#include "totalcolor/dimacs.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"
#include "totalcolor/matching.hpp"
#include "totalcolor/methods.hpp"
#include "totalcolor/oracles.hpp"
#include "totalcolor/starter.hpp"
#include "totalcolor/tables.hpp"
