#pragma once

#include "profile3/boundary.hpp"
#include "profile3/census.hpp"
#include "profile3/constructions.hpp"
#include "profile3/error.hpp"
#include "profile3/graph.hpp"
#include "profile3/graphon.hpp"
#include "profile3/io.hpp"
#include "profile3/numeric.hpp"
#include "profile3/optimizer.hpp"
#include "profile3/verify.hpp"
