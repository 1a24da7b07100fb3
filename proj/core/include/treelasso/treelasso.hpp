#pragma once

#include "treelasso/closure.hpp"
#include "treelasso/cords.hpp"
#include "treelasso/cover.hpp"
#include "treelasso/errors.hpp"
#include "treelasso/neighbor_joining.hpp"
#include "treelasso/newick.hpp"
#include "treelasso/rank_certificate.hpp"
#include "treelasso/reconstruct.hpp"
#include "treelasso/shelling.hpp"
#include "treelasso/tolerance.hpp"
#include "treelasso/topology_oracle.hpp"
#include "treelasso/tree_ops.hpp"
#include "treelasso/two_d_tree.hpp"
#include "treelasso/xtree.hpp"
