#pragma once

#include "hermite2/gf2m.hpp"
#include "hermite2/io.hpp"
#include "hermite2/opcount.hpp"
#include "hermite2/oracle.hpp"
#include "hermite2/poly.hpp"
#include "hermite2/rng.hpp"
#include "hermite2/transform.hpp"
