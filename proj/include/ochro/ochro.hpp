#ifndef OCHRO_OCHRO_HPP
#define OCHRO_OCHRO_HPP

#include "ochro/bounds.hpp"
#include "ochro/colouring.hpp"
#include "ochro/diameter.hpp"
#include "ochro/experiment.hpp"
#include "ochro/generators.hpp"
#include "ochro/graph.hpp"
#include "ochro/io.hpp"
#include "ochro/lemma2.hpp"
#include "ochro/rng.hpp"
#include "ochro/solver.hpp"

#endif // OCHRO_OCHRO_HPP
