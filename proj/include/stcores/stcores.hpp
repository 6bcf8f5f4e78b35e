#pragma once

#include "stcores/anderson.hpp"
#include "stcores/errors.hpp"
#include "stcores/exact.hpp"
#include "stcores/ideal_enum.hpp"
#include "stcores/identities.hpp"
#include "stcores/partition.hpp"
#include "stcores/poset.hpp"
#include "stcores/render.hpp"
#include "stcores/statistics.hpp"
