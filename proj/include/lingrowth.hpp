#pragma once

#include "lingrowth/constructions.hpp"
#include "lingrowth/decomposition.hpp"
#include "lingrowth/error.hpp"
#include "lingrowth/generators.hpp"
#include "lingrowth/graph.hpp"
#include "lingrowth/growth.hpp"
#include "lingrowth/harness.hpp"
#include "lingrowth/json_io.hpp"
#include "lingrowth/rational.hpp"
#include "lingrowth/separators.hpp"
#include "lingrowth/stack_layout.hpp"
#include "lingrowth/treewidth.hpp"
