#pragma once

// Umbrella header: the whole library except the CLI front end.

#include "core.hpp"
#include "domination.hpp"
#include "extensions.hpp"
#include "flow.hpp"
#include "flowsolver.hpp"
#include "instance_io.hpp"
#include "reductions.hpp"
#include "rules.hpp"
