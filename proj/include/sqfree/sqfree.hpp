#pragma once

#include "sqfree/chartab.hpp"
#include "sqfree/chartab_io.hpp"
#include "sqfree/claims.hpp"
#include "sqfree/codegree.hpp"
#include "sqfree/expr.hpp"
#include "sqfree/group_spec.hpp"
#include "sqfree/lie.hpp"
#include "sqfree/partition.hpp"
#include "sqfree/psl2.hpp"
#include "sqfree/simple_groups.hpp"
#include "sqfree/witness.hpp"
