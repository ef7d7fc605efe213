#pragma once

#include "pisano/arith.hpp"
#include "pisano/field.hpp"
#include "pisano/fib.hpp"
#include "pisano/parallel.hpp"
#include "pisano/code.hpp"
#include "pisano/schmidt_white.hpp"
#include "pisano/coset_graph.hpp"
#include "pisano/tables.hpp"
#include "pisano/report.hpp"
#include "pisano/cli.hpp"
