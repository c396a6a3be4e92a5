#pragma once

#include "robinsonian/core_graph.hpp"
#include "robinsonian/lexbfs.hpp"
#include "robinsonian/matrix_io.hpp"
#include "robinsonian/oracle.hpp"
#include "robinsonian/pqtree.hpp"
#include "robinsonian/robinson.hpp"
#include "robinsonian/straight_enum.hpp"
#include "robinsonian/weak_order.hpp"
