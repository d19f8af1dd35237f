#pragma once

#include "littlewood/closed_form.hpp"
#include "littlewood/extremal.hpp"
#include "littlewood/moments.hpp"
#include "littlewood/norms.hpp"
#include "littlewood/parallel.hpp"
#include "littlewood/rational.hpp"
#include "littlewood/rng.hpp"
#include "littlewood/sequence.hpp"
#include "littlewood/version.hpp"
