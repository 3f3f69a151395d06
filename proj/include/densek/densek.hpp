#ifndef DENSEK_DENSEK_HPP
#define DENSEK_DENSEK_HPP

#include "densek/combined.hpp"
#include "densek/damks_lp.hpp"
#include "densek/error.hpp"
#include "densek/exact.hpp"
#include "densek/fkp.hpp"
#include "densek/flow.hpp"
#include "densek/generators.hpp"
#include "densek/graph.hpp"
#include "densek/lp.hpp"
#include "densek/rational.hpp"
#include "densek/ratio.hpp"
#include "densek/reduction.hpp"
#include "densek/rng.hpp"

#endif
