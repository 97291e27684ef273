#pragma once

// Exact arithmetic tower: big rationals, Laurent polynomials in q, Q(q), and Q(q)[x].

#include "laurent.hpp"
#include "numbers.hpp"
#include "polyx.hpp"
#include "qnumbers.hpp"
#include "ratfunc.hpp"
#include "upoly.hpp"
