#pragma once

#include "kfk/alexander.hpp"
#include "kfk/braid.hpp"
#include "kfk/brown.hpp"
#include "kfk/checked.hpp"
#include "kfk/error.hpp"
#include "kfk/fibration.hpp"
#include "kfk/laurent.hpp"
#include "kfk/orbilens.hpp"
#include "kfk/rational.hpp"
#include "kfk/slope.hpp"
#include "kfk/surgery.hpp"
#include "kfk/sweep.hpp"
#include "kfk/word.hpp"
