#pragma once

#include "contam/bounds.hpp"
#include "contam/engine.hpp"
#include "contam/errors.hpp"
#include "contam/geometry.hpp"
#include "contam/harness.hpp"
#include "contam/io.hpp"
#include "contam/messages.hpp"
#include "contam/strategies.hpp"
#include "contam/swarm_graph.hpp"
#include "contam/wpc.hpp"
