#pragma once

#include "spechtsym/gf.hpp"
#include "spechtsym/combinatorics.hpp"
#include "spechtsym/modact.hpp"
#include "spechtsym/symalg.hpp"
#include "spechtsym/spechtmod.hpp"
#include "spechtsym/splitters.hpp"
#include "spechtsym/repring.hpp"
#include "spechtsym/vertexcalc.hpp"
