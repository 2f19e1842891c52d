#pragma once

#include "circone/core.hpp"
#include "circone/bracelet.hpp"
#include "circone/pqtree.hpp"
#include "circone/tucker.hpp"
#include "circone/circ_rows.hpp"
#include "circone/circ_rc.hpp"
#include "circone/graph.hpp"
#include "circone/io.hpp"
#include "circone/catalog.hpp"
#include "circone/concave_round.hpp"
#include "circone/extraction.hpp"
#include "circone/cliques.hpp"
#include "circone/oracles.hpp"
#include "circone/certificates.hpp"
