// Umbrella header for the whole library.
#pragma once

#include "burnside/chain.hpp"
#include "burnside/eigenbasis.hpp"
#include "burnside/json_io.hpp"
#include "burnside/mixing.hpp"
#include "burnside/orthopoly.hpp"
#include "burnside/rational.hpp"
#include "burnside/sl2.hpp"
#include "burnside/tableau.hpp"
#include "burnside/tensor.hpp"
#include "burnside/wz.hpp"
#include "burnside/checks.hpp"
