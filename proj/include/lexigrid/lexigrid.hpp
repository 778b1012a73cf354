#pragma once

#include "alphabet.hpp"
#include "distribution.hpp"
#include "error.hpp"
#include "frequency.hpp"
#include "grid.hpp"
#include "grid_laws.hpp"
#include "infometrics.hpp"
#include "rank.hpp"
#include "rational.hpp"
#include "reference_data.hpp"
#include "text.hpp"
#include "utf8.hpp"
