#pragma once

#include "kft/audit.hpp"
#include "kft/blocks.hpp"
#include "kft/canonical.hpp"
#include "kft/chordal.hpp"
#include "kft/connectivity.hpp"
#include "kft/constructors.hpp"
#include "kft/error.hpp"
#include "kft/graph.hpp"
#include "kft/io.hpp"
#include "kft/packing.hpp"
#include "kft/params.hpp"
#include "kft/search.hpp"
#include "kft/verify.hpp"
#include "kft/vertex_set.hpp"
