#pragma once

#include "basering.hpp"
#include "completion.hpp"
#include "errors.hpp"
#include "hensel.hpp"
#include "henselstage.hpp"
#include "kbeta.hpp"
#include "kernel.hpp"
#include "newton.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
#include "ring_traits.hpp"
#include "tower.hpp"
#include "unipoly.hpp"
#include "valgroup.hpp"
#include "valuedfield.hpp"
