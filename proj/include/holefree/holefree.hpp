#pragma once

#include "holefree/config.hpp"
#include "holefree/engine.hpp"
#include "holefree/error.hpp"
#include "holefree/generators.hpp"
#include "holefree/graph.hpp"
#include "holefree/graph_io.hpp"
#include "holefree/pmc.hpp"
#include "holefree/recognition.hpp"
#include "holefree/separators.hpp"
#include "holefree/solvers.hpp"
#include "holefree/vertex_set.hpp"
#include "holefree/weight.hpp"
