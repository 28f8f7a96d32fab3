#ifndef HYPERCHROMA_HYPERCHROMA_HPP
#define HYPERCHROMA_HYPERCHROMA_HPP

#include <hyperchroma/bounds.hpp>
#include <hyperchroma/chains.hpp>
#include <hyperchroma/coloring.hpp>
#include <hyperchroma/experiment.hpp>
#include <hyperchroma/hypergraph.hpp>
#include <hyperchroma/io.hpp>
#include <hyperchroma/oracles.hpp>
#include <hyperchroma/rng.hpp>
#include <hyperchroma/two_phase.hpp>

#endif
