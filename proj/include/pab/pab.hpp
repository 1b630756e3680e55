#pragma once

// Umbrella header for the whole library.

#include "pab/attachment.hpp"
#include "pab/bounds.hpp"
#include "pab/campaign.hpp"
#include "pab/colouring.hpp"
#include "pab/connectivity.hpp"
#include "pab/cutset.hpp"
#include "pab/driver.hpp"
#include "pab/errors.hpp"
#include "pab/formats.hpp"
#include "pab/generators.hpp"
#include "pab/graph.hpp"
#include "pab/guards.hpp"
#include "pab/multipartite.hpp"
#include "pab/oracles.hpp"
#include "pab/pattern.hpp"
#include "pab/rng.hpp"
#include "pab/serialize.hpp"
#include "pab/subdivision.hpp"
#include "pab/trace.hpp"
#include "pab/witness.hpp"
