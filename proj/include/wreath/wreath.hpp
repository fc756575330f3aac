#pragma once

// Umbrella header.

#include "wreath/branching.hpp"
#include "wreath/checked.hpp"
#include "wreath/double_coset.hpp"
#include "wreath/error.hpp"
#include "wreath/littlewood_richardson.hpp"
#include "wreath/notation.hpp"
#include "wreath/partition.hpp"
#include "wreath/permutation.hpp"
#include "wreath/schur_oracle.hpp"
#include "wreath/tableau.hpp"
#include "wreath/verify.hpp"
