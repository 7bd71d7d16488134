#pragma once

#include "divser/arith.hpp"
#include "divser/bigreal.hpp"
#include "divser/identities.hpp"
#include "divser/numeric.hpp"
#include "divser/profile.hpp"
#include "divser/ramanujan.hpp"
#include "divser/report.hpp"
#include "divser/series.hpp"
#include "divser/verify.hpp"
#include "divser/zeta.hpp"
