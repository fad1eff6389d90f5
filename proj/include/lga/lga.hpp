#pragma once

#include "lga/bitset.hpp"
#include "lga/core.hpp"
#include "lga/decision.hpp"
#include "lga/graph.hpp"
#include "lga/parse.hpp"
#include "lga/partitions.hpp"
#include "lga/ranges.hpp"
#include "lga/scc.hpp"
#include "lga/skew.hpp"
#include "lga/subshift.hpp"
#include "lga/topograph.hpp"
#include "lga/verdict.hpp"
