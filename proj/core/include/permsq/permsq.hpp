#pragma once

#include "permsq/census.hpp"
#include "permsq/classify.hpp"
#include "permsq/count.hpp"
#include "permsq/enumerate.hpp"
#include "permsq/identities.hpp"
#include "permsq/maps.hpp"
#include "permsq/partitions.hpp"
#include "permsq/permutation.hpp"
#include "permsq/report_io.hpp"
#include "permsq/squares.hpp"
#include "permsq/type_ranker.hpp"
