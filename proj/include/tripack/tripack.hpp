#pragma once

#include "tripack/bounds.hpp"
#include "tripack/errors.hpp"
#include "tripack/explorer.hpp"
#include "tripack/generators.hpp"
#include "tripack/graph.hpp"
#include "tripack/io.hpp"
#include "tripack/oracle.hpp"
#include "tripack/packing.hpp"
#include "tripack/partition.hpp"
#include "tripack/symmetrize.hpp"
