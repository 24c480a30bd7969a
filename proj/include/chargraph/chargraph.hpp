#pragma once

#include "chargraph/arith.hpp"
#include "chargraph/classify.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/graph.hpp"
#include "chargraph/io.hpp"
#include "chargraph/shapes.hpp"
