#pragma once

#include "exactalg.hpp"
#include "flags.hpp"
#include "generators.hpp"
#include "poset.hpp"
#include "poset_io.hpp"
#include "qbasis.hpp"
#include "qincidence.hpp"
#include "qzeta.hpp"
