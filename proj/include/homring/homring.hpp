#pragma once

// Umbrella header for the homring library.

#include "homring/errors.hpp"
#include "homring/cyclotomic.hpp"
#include "homring/profile.hpp"
#include "homring/ring.hpp"
#include "homring/partition.hpp"
#include "homring/homweight.hpp"
#include "homring/hprime.hpp"
#include "homring/codes.hpp"
