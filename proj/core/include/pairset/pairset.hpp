#pragma once

#include "pairset/avoidability.hpp"
#include "pairset/combinatorics.hpp"
#include "pairset/constructions.hpp"
#include "pairset/density.hpp"
#include "pairset/errors.hpp"
#include "pairset/hypergraph.hpp"
#include "pairset/io.hpp"
#include "pairset/oracle.hpp"
#include "pairset/rational.hpp"
#include "pairset/serialize.hpp"
#include "pairset/subsets.hpp"
