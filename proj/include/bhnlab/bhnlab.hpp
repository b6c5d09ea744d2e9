#pragma once

#include "bhnlab/bhn.hpp"
#include "bhnlab/enumerate.hpp"
#include "bhnlab/families.hpp"
#include "bhnlab/graph.hpp"
#include "bhnlab/graph6.hpp"
#include "bhnlab/hamilton.hpp"
#include "bhnlab/verify.hpp"
