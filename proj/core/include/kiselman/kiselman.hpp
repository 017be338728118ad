#pragma once

// Umbrella header.

#include "kiselman/boolmat.hpp"
#include "kiselman/counting.hpp"
#include "kiselman/elements.hpp"
#include "kiselman/errors.hpp"
#include "kiselman/io.hpp"
#include "kiselman/monotone.hpp"
#include "kiselman/morphisms.hpp"
#include "kiselman/rewriting.hpp"
#include "kiselman/subset.hpp"
#include "kiselman/verify.hpp"
#include "kiselman/word.hpp"
