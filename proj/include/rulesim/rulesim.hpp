#pragma once

#include "rulesim/core.hpp"
#include "rulesim/transform.hpp"
#include "rulesim/covers.hpp"
#include "rulesim/simulate.hpp"
#include "rulesim/exact.hpp"
#include "rulesim/enumerate.hpp"
#include "rulesim/generate.hpp"
#include "rulesim/io.hpp"
#include "rulesim/bench.hpp"
#include "rulesim/verify.hpp"
