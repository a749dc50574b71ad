#pragma once

#include "cordial/constructions.hpp"
#include "cordial/digraph.hpp"
#include "cordial/enumeration.hpp"
#include "cordial/harness.hpp"
#include "cordial/io.hpp"
#include "cordial/search.hpp"
