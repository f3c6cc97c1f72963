#pragma once

#include "l21/badness.hpp"
#include "l21/chain_graph.hpp"
#include "l21/configurations.hpp"
#include "l21/corpus.hpp"
#include "l21/gadgets.hpp"
#include "l21/io.hpp"
#include "l21/labeler.hpp"
#include "l21/labeling.hpp"
#include "l21/oracle.hpp"
#include "l21/tree.hpp"
#include "l21/weights.hpp"
