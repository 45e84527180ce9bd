#pragma once

#include "mbs/abelian_group.hpp"
#include "mbs/bounds.hpp"
#include "mbs/core.hpp"
#include "mbs/graphs.hpp"
#include "mbs/homology.hpp"
#include "mbs/io.hpp"
#include "mbs/neighborhood.hpp"
#include "mbs/permutation.hpp"
#include "mbs/smith.hpp"
