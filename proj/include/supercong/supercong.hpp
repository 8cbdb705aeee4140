#pragma once

// Umbrella header.

#include "exact.hpp"
#include "padic.hpp"
#include "sequences.hpp"
#include "wz.hpp"
#include "claims.hpp"
#include "report.hpp"
