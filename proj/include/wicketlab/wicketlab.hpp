#pragma once

#include "wicketlab/assignment.hpp"
#include "wicketlab/bounds.hpp"
#include "wicketlab/claim.hpp"
#include "wicketlab/coloring.hpp"
#include "wicketlab/eisenstein.hpp"
#include "wicketlab/eisenstein_build.hpp"
#include "wicketlab/eqfree.hpp"
#include "wicketlab/error.hpp"
#include "wicketlab/gf3.hpp"
#include "wicketlab/hypergraph.hpp"
#include "wicketlab/modular.hpp"
#include "wicketlab/rsz_f3.hpp"
#include "wicketlab/setio.hpp"
