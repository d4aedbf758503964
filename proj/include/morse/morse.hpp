// Umbrella header.
#ifndef MORSE_MORSE_HPP
#define MORSE_MORSE_HPP

#include "complex.hpp"
#include "heuristic.hpp"
#include "homology.hpp"
#include "instances.hpp"
#include "io.hpp"
#include "lp.hpp"
#include "matching.hpp"
#include "separation.hpp"
#include "solver.hpp"

#endif  // MORSE_MORSE_HPP
