#pragma once

#include "ringlab/bitset.hpp"
#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/family.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/localization.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/primality.hpp"
#include "ringlab/quotient.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/search.hpp"
#include "ringlab/spec.hpp"
#include "ringlab/theorems.hpp"
