#pragma once

#include "gapart/bigint.hpp"
#include "gapart/denumerant.hpp"
#include "gapart/enumerate.hpp"
#include "gapart/errors.hpp"
#include "gapart/golden.hpp"
#include "gapart/injections.hpp"
#include "gapart/json_io.hpp"
#include "gapart/params.hpp"
#include "gapart/partition.hpp"
#include "gapart/rng.hpp"
#include "gapart/series.hpp"
#include "gapart/thresholds.hpp"
#include "gapart/verify.hpp"
